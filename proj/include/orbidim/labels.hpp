#pragma once
// Region labels: the left-of-strand rule on plabic diagrams and the direct
// 5-step labeling algorithm on orbifold diagrams (segment labels shifted at
// cut crossings, per-piece two-coloring of the cut-open disk, missing labels
// added by the Omega-sidedness rule).

#include <map>
#include <set>
#include <vector>

#include "orbidim/strandmap.hpp"

namespace orbidim {

// Alternating + boundary faces -> sorted label sets.
std::map<int, std::vector<int>> postnikov_labels(const Diagram& d);

std::vector<int> rotate_set(const std::vector<int>& I, int n0, int n);
// Orbit of I under pointwise +n0 mod n, sorted unique.
std::vector<std::vector<int>> label_class(const std::vector<int>& I, int n0,
                                          int n);

// Step 2: per strand, list of ((seg_lo, seg_hi), label) ranges.
struct SegmentLabels {
  std::map<int, std::vector<std::pair<std::pair<int, int>, int>>> per;
  std::set<int> all;
};
SegmentLabels segment_labels(const Diagram& d);

bool omega_left_of(const Diagram& d, int s);
int omega_face(const Diagram& d, const FaceData& fd);

// 0 = full, 1 = lo (before the cut crossing), 2 = hi (after it)
enum class Part { Full = 0, Lo = 1, Hi = 2 };
enum class Side { CCW = 0, CW = 1 };

struct StrandPieces {
  struct Piece {
    int strand;
    int label;
    std::vector<std::pair<int, Part>> items;  // (segment, part)
  };
  std::vector<Piece> pieces;
  std::map<std::tuple<int, int, Part>, int> part_pid;  // (s, seg, part) -> idx
  std::map<std::pair<int, int>, std::pair<Side, Side>> seg_half_side;
  // (s, seg) -> (lo side, hi side) for cut segments
};
StrandPieces strand_pieces(const Diagram& d);

struct CutOpen {
  std::set<int> split;                       // faces split by the cut
  std::map<std::pair<int, Dart>, Side> side_of;
  std::vector<int> cutfaces;                 // F0 (centre) .. Fm (boundary)
};
CutOpen cut_open_structure(const Diagram& d, const FaceData& fd);

struct DirectLabels {
  std::map<int, std::vector<int>> regions;   // non-cyclic faces
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> halves;
  // split face -> (ccw labels, cw labels)
  std::vector<int> missing;
  std::vector<int> added;
};
DirectLabels direct_labels(const Diagram& d);

// Label classes seen on the full cover, projected to orbifold faces: each
// cover face maps onto one orbifold face by reducing its darts mod n0.
std::map<int, std::set<std::vector<int>>> cover_label_classes(const Diagram& d);

// Direct label of every region lies in its cover class, and the two halves
// of each split face differ by a one-step rotation.
bool cross_validate_labels(const Diagram& d);

}  // namespace orbidim
