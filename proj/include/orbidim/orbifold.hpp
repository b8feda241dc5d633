#pragma once
// Orbifold operations: d-fold symmetrization (cover), quotient of a
// rotation-symmetric plabic diagram, diagram isomorphism up to crossing
// relabeling and boundary rotation, and diagram reduction (bigon and
// empty-loop moves).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbidim/strandmap.hpp"

namespace orbidim {

struct NotEquivariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (strand, segment) -> copy offset accumulated before each visit position;
// pre[(s, V+1)] is the strand's total winding contribution.
std::map<std::pair<int, int>, int> pre_offsets(const Diagram& d);

// d-fold cover of an orbifold diagram (d = 0 means use the diagram's order).
Diagram sym_d(const Diagram& diag, int d = 0);

// Canonical serialization invariant under crossing relabeling.
std::string canonical_key(const Diagram& diag);

// Rotate boundary labels by r (strand/point i -> i + r).
Diagram rotate_diag(const Diagram& diag, int r);

// Equality up to crossing relabeling and a boundary rotation (cut ignored).
bool isomorphic(const Diagram& d1, const Diagram& d2);

// Quotient of a d-fold rotation-symmetric plabic diagram; the cut is rebuilt
// by a face-path search from the rotation-fixed centre face to the boundary
// between points n0 and 1. Throws NotEquivariant / BadOrder.
Diagram quotient(const Diagram& diag, int d);

// ---- reduction ---------------------------------------------------------
struct ReduceMove {
  std::string type;          // "bigon" or "loop"
  std::vector<int> removed;  // crossing ids deleted by the move
};

// Applies bigon moves (i) and empty-loop moves (ii) until none applies.
// For orbifold diagrams a move is skipped when its region is the centre
// face of the cut. Idempotent.
std::pair<Diagram, std::vector<ReduceMove>> reduce(const Diagram& diag);

}  // namespace orbidim
