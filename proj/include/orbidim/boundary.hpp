#pragma once
// Boundary algebra eAe of a frozen Jacobian algebra: discovery of minimal
// generators of rad(eAe), structural identification of the double cyclic
// quiver on the rim, truncation-free certification of its relations by
// rewrite certificates over the binomial Jacobian relations, and filtered
// dimensions of the certified presentation.

#include <optional>

#include "orbidim/qp.hpp"

namespace orbidim {

// RREF of the ideal inside the length-<=m truncation; returns the reducer
// and all frozen-endpoint paths of positive length sorted by length.
struct BlockStructure {
  SparseRREF<Path<QArrow>> rref;
  std::vector<std::tuple<int, QVertex, QVertex, Path<QArrow>>> epaths;
};
BlockStructure block_structure(const QP& q,
                               const std::vector<Relation<QArrow>>& rels,
                               int m, const Field& F);

// Minimal generators of rad(eAe): shortest e-paths independent mod rad^2.
std::vector<std::tuple<int, QVertex, QVertex, Path<QArrow>>> find_generators(
    const QP& q, const std::vector<Relation<QArrow>>& rels, int m,
    const Field& F);

// BFS over binomial substitutions: returns lambda with start = lambda * goal
// in the (untruncated) quotient, or nullopt if not reachable within the caps.
std::optional<Field::El> rewrite_verify(
    const std::vector<Relation<QArrow>>& rels, const Path<QArrow>& start,
    const Path<QArrow>& goal, const Field& F, int maxlen,
    long maxstates = 2000000);

// dim eAe/rad^{j+1} for j = 0..jmax-1 computed inside the truncation, plus
// dim of the frozen block; independent cross-check for the certified dims.
std::pair<std::vector<long>, long> idempotent_radical_dims(
    const QP& q, const std::vector<Relation<QArrow>>& rels, int jmax, int m,
    const Field& F);

struct BoundaryPresentation {
  int nverts = 0;       // rim vertices (boundary faces in arc order)
  int k = 0, nk = 0;    // certified x^k = y^{nk} exponents
  bool structural_ok = false;  // double cyclic quiver shape confirmed
  bool certified = false;      // all rewrite certificates returned lambda = 1
  std::vector<long> dims;      // filtered dims j=0..jmax of the presentation
  std::vector<int> gen_lengths;
  std::string note;            // reason when not certified
};

// m: truncation used for generator discovery; jmax: dims range.
BoundaryPresentation boundary_presentation(const Diagram& diag, int m,
                                           int jmax);

}  // namespace orbidim
