#pragma once
// Combinatorial-map core: rotation system, face tracing, face classification,
// Postnikov / weak-orbifold validation, winding invariants.
//
// Darts:
//   seg dart (s, j, end): segment j of strand s, end 0 = at visit j,
//     end 1 = at visit j+1 (1-based visits);
//   arc dart (p, end): boundary arc joining point p (end 0) to p+1 (end 1).
// A dart is listed at the vertex it emanates from; rotations are clockwise.

#include <array>
#include <compare>
#include <map>
#include <tuple>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbidim/diagram.hpp"

namespace orbidim {

struct Dart {
  int kind = 0;  // 0 = seg, 1 = arc
  int s = 0;     // strand id (seg) or arc id (arc)
  int j = 0;     // segment index (seg only)
  int end = 0;
  auto operator<=>(const Dart&) const = default;

  static Dart seg(int s, int j, int end) { return {0, s, j, end}; }
  static Dart arc(int p, int end) { return {1, p, 0, end}; }
  bool is_seg() const { return kind == 0; }
  bool is_arc() const { return kind == 1; }
};

struct MapVertex {
  int kind = 0;  // 0 = marked point ('pt'), 1 = crossing ('x')
  int id = 0;
  auto operator<=>(const MapVertex&) const = default;
};

using Face = std::vector<Dart>;

struct RotationSystem {
  std::map<MapVertex, std::vector<Dart>> rot;
  std::map<int, MapVertex> point_vertex;  // boundary point -> vertex
};

enum class FaceKind { Boundary, Cyclic, Alternating };
std::string face_kind_name(FaceKind k);

struct FaceData {
  std::vector<Face> faces;   // outer face removed
  Face outer;
  std::map<Dart, int> fmap;  // dart -> face index
  std::vector<FaceKind> kinds;
};

struct InconsistentMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// For a boundary crossing: the (outgoing, incoming) visits at its point.
std::pair<Visit, Visit> out_in_visits(const Diagram& d, int cid);

RotationSystem build_map(const Diagram& d);
Dart opposite(const Dart& d);

// Face walk; throws InconsistentMap if a walk does not close. Deterministic:
// faces are numbered by first-encounter order over vertices sorted as python's
// str() would sort their keys (calibration of the frozen face ids).
std::pair<std::vector<Face>, Face> trace_faces(const Diagram& d);

// faces + fmap + kinds in one call.
FaceData face_data(const Diagram& d);

struct EulerReport {
  bool ok;
  int V, E, F;
};
EulerReport euler_check(const Diagram& d);

// ---- windings ----------------------------------------------------------
inline int flag_sign(char fl) { return fl == 'R' ? 1 : -1; }

int signed_cut_count(const Diagram& d, int s, int seg_lo, int seg_hi);
std::vector<std::tuple<int, int, int>> self_crossings(const Diagram& d, int s);
int S_value(const Diagram& d, int s);

struct DoubleCrossing {
  int ca, cb;          // crossing ids, both strands run ca -> cb
  int a1, b1, a2, b2;  // visit positions on strand 1 / strand 2
};
std::vector<DoubleCrossing> double_crossings(const Diagram& d, int s1, int s2);
int pair_winding(const Diagram& d, int s1, int s2, const DoubleCrossing& pr);
int L_value(const Diagram& d, int s1, int s2);
int orbifold_threshold(const Diagram& d);
int strand_winding(const Diagram& d, int s);

// ---- validation --------------------------------------------------------
struct ValidationReport {
  bool euler = false;
  std::vector<std::tuple<int, int>> alternation;       // (strand, position)
  std::vector<std::array<int, 4>> cond4;               // (s1, s2, cidA, cidB)
  std::vector<std::array<int, 4>> cond5;               // (s, cid, i, j)
  bool ok = false;
};

ValidationReport validate_postnikov(const Diagram& d);
ValidationReport validate_weak_orbifold(const Diagram& d);

// (true, threshold) iff order > max(S, L) threshold.
std::pair<bool, int> is_orbifold_diagram(const Diagram& d);

std::optional<std::pair<int, int>> check_grassmannian(const Diagram& d);

// (k, n, w_plus) when tau = id and all windings lie in {w+, w+ - d}.
std::optional<std::array<int, 3>> grassmannian_type(const Diagram& d);

// ---- quiver support ----------------------------------------------------
struct CrossingRoles {
  // interior: a_in, a_out, b_in, b_out; boundary: o_out, i_in, arc_next,
  // arc_prev (unused roles left default-constructed).
  Dart a_in, a_out, b_in, b_out;
  Dart o_out, i_in, arc_next, arc_prev;
};
CrossingRoles crossing_darts(const Diagram& d, int cid);
char eff_chir(const Diagram& d, int cid);

// crossing id -> (src_face, tgt_face)
std::map<int, std::pair<int, int>> quiver_arrows(const Diagram& d,
                                                 const FaceData& fd);

struct FundCycle {
  int face;
  int sign;                 // +1 counterclockwise, -1 clockwise
  std::vector<int> cids;    // chained: tgt(arrow t) = src(arrow t+1)
};
std::vector<FundCycle> fundamental_cycles(
    const Diagram& d, const FaceData& fd,
    const std::map<int, std::pair<int, int>>& arrows);

// ---- rotation symmetry -------------------------------------------------
struct Rotation {
  std::map<int, int> smap;  // strand -> strand
  std::map<int, int> cmap;  // crossing -> crossing
};
std::optional<Rotation> find_rotation(const Diagram& d, int s_order);

// Induced permutation on face ids (asserts the rotation exists).
std::map<int, int> face_rotation(const Diagram& d, const FaceData& fd,
                                 int s_order);

}  // namespace orbidim
