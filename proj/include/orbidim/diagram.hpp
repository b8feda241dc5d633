#pragma once
// Strand diagrams on a marked disk, stored as combinatorial maps:
// per-strand crossing visit lists plus crossing records with chirality.
// Conventions:
//   - boundary points 1..n clockwise; strand i starts at point i and ends at
//     tau(i);
//   - chir 'L'  <=>  the strand of visit b crosses the strand of visit a from
//     a's left;
//   - segment j of strand s connects visit j and visit j+1 (1-based visits);
//   - cut entries (strand, segment, flag) are ordered from the center outward
//     (orbifold diagrams only); flag 'R' means the center lies to the right
//     of the strand at that crossing.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace orbidim {

struct Visit {
  int strand = 0;
  int pos = 0;
  auto operator<=>(const Visit&) const = default;
};

struct Crossing {
  Visit a, b;
  char chir = 'L';     // 'L' or 'R'
  int at = 0;          // boundary point id, 0 = interior crossing
  auto operator<=>(const Crossing&) const = default;
};

struct CutCrossing {
  int strand = 0;
  int seg = 0;
  char flag = 'L';     // 'L' or 'R'
  auto operator<=>(const CutCrossing&) const = default;
};

struct Diagram {
  std::string kind = "postnikov";  // "postnikov" | "orbifold"
  int n_points = 0;
  int order = 1;                   // orbifold order d (1 for postnikov)
  std::vector<int> tau;            // tau[i-1] = endpoint of strand i
  std::vector<std::vector<int>> strands;  // visit lists (crossing ids)
  std::map<int, Crossing> crossings;
  std::vector<CutCrossing> cut;

  const std::vector<int>& visits(int s) const { return strands[s - 1]; }
  int n_visits(int s) const { return static_cast<int>(strands[s - 1].size()); }
  const Crossing& crossing(int cid) const { return crossings.at(cid); }
  bool is_orbifold() const { return kind == "orbifold"; }
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// .osd text format (line oriented, '#' comments).
Diagram parse_osd(const std::string& text);
std::string serialize_osd(const Diagram& d);

// Structural invariants: visit lists and crossing records agree, tau is a
// permutation matching strand endpoints, ids resolve. Throws on failure.
void check_structure(const Diagram& d);

inline int md(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace orbidim
