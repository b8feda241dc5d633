#pragma once
// End-to-end verification that the Jacobian algebra of an orbifold diagram is
// realized inside the endomorphism algebra of the class-module tilting object:
// arrow generators are picked canonically inside the Hom spaces (constrained
// by combinatorially required layer shifts), relations are checked exactly
// (solving for per-copy gauge scalars when needed), and the filtered
// dimensions of the generated subalgebra are compared with the Jacobian side.

#include <optional>

#include "orbidim/labels.hpp"
#include "orbidim/modules.hpp"
#include "orbidim/qp.hpp"

namespace orbidim {

struct GaugeInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenerationGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Setup {
  Diagram diag;
  Field F;
  QP q;
  std::map<int, std::set<int>> labels;  // face -> label set
  std::vector<std::set<int>> classes;
  std::map<std::set<int>, int> cidx;
  std::map<std::pair<int, int>, std::vector<Hom>> basis;  // class pair -> homs
  std::map<QVertex, std::pair<int, Hom>> idem;  // vertex -> (class, idem hom)
  int n0 = 0, d = 1, N = 12;
};

Setup build_setup(const Diagram& diag, int n0, int d, int N = 12);

// Constant layer shift of a union-find basis hom.
int basis_shift(const Hom& h, int d);

// Layer shift required of each arrow between unsplit vertices, from the
// region labels on both sides of the crossing (nullopt at split copies).
std::map<QArrow, std::optional<int>, QArrowStrLess> arrow_shifts(
    const Setup& S);

struct ArrowImage {
  QVertex u, w;
  Hom g;
};

// Canonical generator per arrow: minimal-pivot new direction of the
// idempotent-projected Hom space, restricted to the required shift.
std::map<QArrow, std::optional<ArrowImage>, QArrowStrLess> arrow_images(
    const Setup& S,
    const std::map<QArrow, std::optional<int>, QArrowStrLess>& shifts,
    int sign = 1);

using Images = std::map<QArrow, std::optional<ArrowImage>, QArrowStrLess>;

Hom realize_path(const Setup& S, const Images& imgs, const Path<QArrow>& p);

struct RelReport {
  QArrow a;
  bool ok = false;
  std::vector<std::tuple<Coeff, Path<QArrow>, Hom>> pieces;  // kept if !ok
};
std::vector<RelReport> check_relations(
    const Setup& S, const Images& imgs,
    const std::map<QArrow, Field::El>* gauges = nullptr);

// Per-arrow unit scalars making all relations hold; {} if the trivial gauge
// already works, nullopt if no consistent gauge exists on any split crossing.
std::optional<std::map<QArrow, Field::El>> solve_gauges(const Setup& S,
                                                        const Images& imgs);

struct SpanDims {
  long total = 0;          // rank of the generated subalgebra
  int stabilized_at = -1;  // first length adding no new directions
  std::vector<long> dims;  // dims of the filtration quotients, j = 0..jmax
};
SpanDims generated_spans(const Setup& S, const Images& imgs, int jmax = 6,
                         int maxlen = 200);

struct VerifyResult {
  bool relations_pass = false;
  bool gauge_trivial = false;
  long generated_total = 0;
  std::vector<long> dims_end_side, dims_jacobian;
  bool dims_match = false;
};
VerifyResult run_verify(const Diagram& diag, int n0, int d,
                        bool negate = false, int N = 12, int jmax = 6);

// (block-formula dim of R2, total dim of End of the tilting module).
std::pair<long, long> r2_dims(const Diagram& diag, int n0, int d, int N = 12);

}  // namespace orbidim
