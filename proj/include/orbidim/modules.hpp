#pragma once
// Rank-one modules over the boundary algebra B(k,n), class modules over the
// invariant subalgebra B_G, Hom spaces over R_N = Q(zeta_d)[t]/(t^N), and
// isomorphism testing of class modules.

#include <set>

#include "orbidim/algebra.hpp"

namespace orbidim {

// t-exponents of the x_i / y_i action on the rank-one module L_I.
std::pair<std::map<int, int>, std::map<int, int>> rk1_exps(
    const std::set<int>& I, int n);

long hom_B_dim(const std::set<int>& I, const std::set<int>& J, int n, int N,
               const Field& F);

// t-exponent of x_i on layer l of the class module L_[I].
std::map<std::pair<int, int>, int> class_exps(const std::set<int>& I, int n0,
                                              int d);

long hom_BG_dim(const std::set<int>& I, const std::set<int>& J, int n0, int d,
                int N, const Field& F);

// Arrow exponents of the induced module: (x-exponents, y-exponents) per
// (vertex, layer).
std::pair<std::map<std::pair<int, int>, int>, std::map<std::pair<int, int>, int>>
induce_exps(const std::set<int>& I, int n0, int d);

bool check_rank_one_relations(const std::set<int>& I, int k, int n, int N);
bool check_class_relations(const std::set<int>& I, int n0, int d, int k, int N);

// ---- explicit homs between class modules --------------------------------
// phi(1_i^l) = sum over (lp, c) of  h[(i,l)][(lp,c)] t^c 1_i^{lp}
using Hom = std::map<std::pair<int, int>,
                     std::map<std::pair<int, int>, Field::El>>;

std::vector<Hom> hom_BG_basis(const std::set<int>& I, const std::set<int>& J,
                              int n0, int d, int N, const Field& F);

Hom hom_compose(const Hom& h2, const Hom& h1, int N, const Field& F);
Hom hom_scale(const Hom& h, const Field::El& s, const Field& F);
Hom hom_add(const Hom& h1, const Hom& h2, const Field& F);
Hom hom_identity(int n0, int d, const Field& F);
Hom hom_layer_shift(int n0, int d, const Field& F, int shift = 1);

// pi_sigma = (1/d) sum_l zeta^{-sigma l zeta_exp} phi^l
Hom eigenprojection(int n0, int d, const Field& F, int sigma,
                    int zeta_exp = 1);

// Flattened row for row reduction; key = tag ++ (c, i, lp, l), so lower
// t-valuation comes first within a tag.
using FlatKey = std::vector<int>;
std::map<FlatKey, Field::El> hom_flat(const Hom& h, const FlatKey& tag);

// Degree-0 part as a dense matrix; rows/cols indexed by (i, l) generators.
std::vector<std::vector<Field::El>> deg0_matrix(const Hom& h, int n0, int d,
                                                const Field& F);
Field::El det(std::vector<std::vector<Field::El>> M, const Field& F);

bool classes_isomorphic(const std::set<int>& I, const std::set<int>& J, int n0,
                        int d, int N, const Field& F, int samples = 5);

}  // namespace orbidim
