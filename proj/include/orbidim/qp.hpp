#pragma once
// Quiver with potential of a diagram and its cyclic-derivative relations.
//
// Arrow ids are (crossing, copy): copy 0 everywhere except when the diagram
// is an orbifold whose central region is alternating; then the central region
// is split into d copies (F0, 1..d) and every incident arrow gets d copies.
// Vertices are (face, copy) with copy 0 off the centre.

#include <string>

#include "orbidim/algebra.hpp"
#include "orbidim/strandmap.hpp"

namespace orbidim {

using QVertex = std::pair<int, int>;  // (face id, copy)
using QArrow = std::pair<int, int>;   // (crossing id, copy)

// Order matching python str() of the id tuples (decimal-string compare of the
// crossing id); used wherever the oracle iterated arrows in str order.
struct QArrowStrLess {
  bool operator()(const QArrow& a, const QArrow& b) const {
    std::string sa = std::to_string(a.first), sb = std::to_string(b.first);
    if (sa != sb) return sa < sb;
    return a.second < b.second;
  }
};

// python str() of a path tuple, e.g. "((2, 0), (5, 1))", "((2, 0),)", "()".
std::string py_str(const Path<QArrow>& p);

struct QP {
  std::vector<QVertex> vertices;
  std::set<QVertex> frozen;
  std::map<QArrow, std::pair<QVertex, QVertex>> arrows;
  std::vector<std::pair<Coeff, Path<QArrow>>> terms;
  int central = -1;          // face id of the cut centre, -1 for plabic
  std::string central_kind;  // "", "alternating", "cyclic", "boundary"
  int order = 1;
  FaceData fd;
};

QP build_qp(const Diagram& diag, int zeta_exp = 1);

// Arrows occurring in at least two potential terms.
std::set<QArrow, QArrowStrLess> internal_arrows(const QP& qp);

// Cyclic derivatives by internal arrows; each relation's merged terms are
// ordered by py_str of the path.
std::map<QArrow, Relation<QArrow>, QArrowStrLess> relations(const QP& qp);

}  // namespace orbidim
