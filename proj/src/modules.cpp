#include "orbidim/modules.hpp"
#include <functional>
#include <optional>
#include <tuple>

#include <random>

#include "orbidim/diagram.hpp"  // md()

namespace orbidim {

std::pair<std::map<int, int>, std::map<int, int>> rk1_exps(
    const std::set<int>& I, int n) {
  std::map<int, int> ax, ay;
  for (int i = 1; i <= n; ++i) {
    ax[i] = I.count(i) ? 0 : 1;
    ay[i] = I.count(i) ? 1 : 0;
  }
  return {ax, ay};
}

long hom_B_dim(const std::set<int>& I, const std::set<int>& J, int n, int N,
               const Field& F) {
  auto [axI, ayI] = rk1_exps(I, n);
  auto [axJ, ayJ] = rk1_exps(J, n);
  auto idx = [N](int i, int c) { return (i - 1) * N + c; };
  Field::El one = F.one(), mone = F.neg(one);
  SparseRREF<int> rref(F);
  auto add = [&](std::map<int, Field::El> row) {
    for (auto it = row.begin(); it != row.end();)
      it = fel_zero(it->second) ? row.erase(it) : std::next(it);
    if (!row.empty()) rref.add_row(std::move(row));
  };
  for (int i = 1; i <= n; ++i) {
    int im1 = md(i - 1, n);
    for (int c = 0; c < N; ++c) {
      // phi_i(x_i m) = x_i phi_{i-1}(m)
      std::map<int, Field::El> row;
      if (c - axI[i] >= 0) row[idx(i, c - axI[i])] = one;
      if (c - axJ[i] >= 0) {
        int k = idx(im1, c - axJ[i]);
        auto it = row.find(k);
        row[k] = F.add(it != row.end() ? it->second : F.zero(), mone);
      }
      add(std::move(row));
    }
    for (int c = 0; c < N; ++c) {
      // phi_{i-1}(y_i m) = y_i phi_i(m)
      std::map<int, Field::El> row;
      if (c - ayI[i] >= 0) row[idx(im1, c - ayI[i])] = one;
      if (c - ayJ[i] >= 0) {
        int k = idx(i, c - ayJ[i]);
        auto it = row.find(k);
        row[k] = F.add(it != row.end() ? it->second : F.zero(), mone);
      }
      add(std::move(row));
    }
  }
  return static_cast<long>(n) * N - rref.rank();
}

std::map<std::pair<int, int>, int> class_exps(const std::set<int>& I, int n0,
                                              int d) {
  int n = n0 * d;
  std::map<std::pair<int, int>, int> a;
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l)
      a[{i, l}] = I.count(md(i + l * n0, n)) ? 0 : 1;
  return a;
}

long hom_BG_dim(const std::set<int>& I, const std::set<int>& J, int n0, int d,
                int N, const Field& F) {
  auto aI = class_exps(I, n0, d);
  auto aJ = class_exps(J, n0, d);
  auto idx = [=](int i, int l, int lp, int c) {
    return ((static_cast<long>(i - 1) * d + l) * d + lp) * N + c;
  };
  Field::El one = F.one(), mone = F.neg(one);
  SparseRREF<long> rref(F);
  auto add = [&](std::map<long, Field::El> row) {
    for (auto it = row.begin(); it != row.end();)
      it = fel_zero(it->second) ? row.erase(it) : std::next(it);
    if (!row.empty()) rref.add_row(std::move(row));
  };
  auto m2 = [d](int x) { return ((x % d) + d) % d; };
  for (int l = 0; l < d; ++l)
    for (int lp = 0; lp < d; ++lp)
      for (int c = 0; c < N; ++c) {
        for (int i = 2; i <= n0; ++i) {
          std::map<long, Field::El> row;
          if (c - aI[{i, l}] >= 0) row[idx(i, l, lp, c - aI[{i, l}])] = one;
          if (c - aJ[{i, lp}] >= 0) {
            long k = idx(i - 1, l, lp, c - aJ[{i, lp}]);
            auto it = row.find(k);
            row[k] = F.add(it != row.end() ? it->second : F.zero(), mone);
          }
          add(std::move(row));
          std::map<long, Field::El> row2;
          if (c - (1 - aI[{i, l}]) >= 0)
            row2[idx(i - 1, l, lp, c - (1 - aI[{i, l}]))] = one;
          if (c - (1 - aJ[{i, lp}]) >= 0) {
            long k = idx(i, l, lp, c - (1 - aJ[{i, lp}]));
            auto it = row2.find(k);
            row2[k] = F.add(it != row2.end() ? it->second : F.zero(), mone);
          }
          add(std::move(row2));
        }
        {
          std::map<long, Field::El> row;
          int L1 = m2(l + 1);
          if (c - aI[{1, L1}] >= 0) row[idx(1, L1, lp, c - aI[{1, L1}])] = one;
          if (c - aJ[{1, lp}] >= 0) {
            long k = idx(n0, l, m2(lp - 1), c - aJ[{1, lp}]);
            auto it = row.find(k);
            row[k] = F.add(it != row.end() ? it->second : F.zero(), mone);
          }
          add(std::move(row));
        }
        {
          std::map<long, Field::El> row;
          if (c - (1 - aI[{1, l}]) >= 0)
            row[idx(n0, m2(l - 1), lp, c - (1 - aI[{1, l}]))] = one;
          if (c - (1 - aJ[{1, m2(lp + 1)}]) >= 0) {
            long k = idx(1, l, m2(lp + 1), c - (1 - aJ[{1, m2(lp + 1)}]));
            auto it = row.find(k);
            row[k] = F.add(it != row.end() ? it->second : F.zero(), mone);
          }
          add(std::move(row));
        }
      }
  return static_cast<long>(n0) * d * d * N - rref.rank();
}

std::pair<std::map<std::pair<int, int>, int>, std::map<std::pair<int, int>, int>>
induce_exps(const std::set<int>& I, int n0, int d) {
  int n = n0 * d;
  auto [ax, ay] = rk1_exps(I, n);
  std::map<std::pair<int, int>, int> a, b;
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l) {
      a[{i, l}] = ax[md(i + l * n0, n)];
      b[{i, l}] = ay[md(i + l * n0, n)];
    }
  return {a, b};
}

bool check_rank_one_relations(const std::set<int>& I, int k, int n, int N) {
  auto [ax, ay] = rk1_exps(I, n);
  for (int i = 1; i <= n; ++i)
    if (ax[i] + ay[i] != 1) return false;
  for (int i = 1; i <= n; ++i) {
    int ex = 0, ey = 0;
    for (int t = 1; t <= k; ++t) ex += ax[md(i + t, n)];
    for (int t = 0; t < n - k; ++t) ey += ay[md(i - t, n)];
    if (ex != ey || ex >= N) return false;
  }
  return true;
}

bool check_class_relations(const std::set<int>& I, int n0, int d, int k,
                           int N) {
  int n = n0 * d;
  auto a = class_exps(I, n0, d);
  auto m2 = [d](int x) { return ((x % d) + d) % d; };
  struct St { int i, l, e; };
  auto step_x = [&](int i, int l) -> St {
    int j = md(i + 1, n0);
    int lp = j == 1 ? m2(l + 1) : l;
    return {j, lp, a[{j, lp}]};
  };
  auto step_y = [&](int i, int l) -> St {
    int j = md(i - 1, n0);
    if (i == 1) return {j, m2(l - 1), 1 - a[{1, l}]};
    return {j, l, 1 - a[{i, l}]};
  };
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l) {
      St sx = step_x(i, l);
      St sy = step_y(sx.i, sx.l);
      if (sx.e + sy.e != 1) return false;
      int ex = 0, ci = i, cl = l;
      for (int t = 0; t < k; ++t) {
        St s = step_x(ci, cl);
        ci = s.i;
        cl = s.l;
        ex += s.e;
      }
      int ey = 0, ci2 = i, cl2 = l;
      for (int t = 0; t < n - k; ++t) {
        St s = step_y(ci2, cl2);
        ci2 = s.i;
        cl2 = s.l;
        ey += s.e;
      }
      if (ci != ci2 || cl != cl2 || ex != ey || ex >= N) return false;
    }
  return true;
}

// ---- explicit homs ------------------------------------------------------

std::vector<Hom> hom_BG_basis(const std::set<int>& I, const std::set<int>& J,
                              int n0, int d, int N, const Field& F) {
  auto aI = class_exps(I, n0, d);
  auto aJ = class_exps(J, n0, d);
  using K = std::tuple<int, int, int, int>;  // (i, l, lp, c)
  std::map<K, K> parent;
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l)
      for (int lp = 0; lp < d; ++lp)
        for (int c = 0; c < N; ++c) {
          K k{i, l, lp, c};
          parent[k] = k;
        }
  std::set<K> zero;
  std::function<K(K)> find = [&](K k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  };
  auto eq = [&](std::optional<K> kA, std::optional<K> kB) {
    if (!kA && !kB) return;
    if (!kA) {
      zero.insert(*kB);
    } else if (!kB) {
      zero.insert(*kA);
    } else {
      K ra = find(*kA), rb = find(*kB);
      if (ra != rb) parent[ra] = rb;
    }
  };
  auto Kk = [](int i, int l, int lp, int c) -> std::optional<K> {
    if (c < 0) return std::nullopt;
    return K{i, l, lp, c};
  };
  auto m2 = [d](int x) { return ((x % d) + d) % d; };
  for (int l = 0; l < d; ++l)
    for (int lp = 0; lp < d; ++lp)
      for (int c = 0; c < N; ++c) {
        for (int i = 2; i <= n0; ++i) {
          eq(Kk(i, l, lp, c - aI[{i, l}]), Kk(i - 1, l, lp, c - aJ[{i, lp}]));
          eq(Kk(i - 1, l, lp, c - (1 - aI[{i, l}])),
             Kk(i, l, lp, c - (1 - aJ[{i, lp}])));
        }
        int L1 = m2(l + 1);
        eq(Kk(1, L1, lp, c - aI[{1, L1}]),
           Kk(n0, l, m2(lp - 1), c - aJ[{1, lp}]));
        eq(Kk(n0, m2(l - 1), lp, c - (1 - aI[{1, l}])),
           Kk(1, l, m2(lp + 1), c - (1 - aJ[{1, m2(lp + 1)}])));
      }
  std::set<K> zroots;
  for (const K& z : zero) zroots.insert(find(z));
  std::map<K, std::vector<K>> classes;
  for (const auto& [k, p] : parent) {
    K r = find(k);
    if (!zroots.count(r)) classes[r].push_back(k);
  }
  Field::El one = F.one();
  std::vector<Hom> basis;
  for (const auto& [r, ks] : classes) {
    Hom h;
    for (const auto& [i, l, lp, c] : ks) h[{i, l}][{lp, c}] = one;
    basis.push_back(std::move(h));
  }
  return basis;
}

Hom hom_compose(const Hom& h2, const Hom& h1, int N, const Field& F) {
  Hom out;
  for (const auto& [il, col] : h1) {
    auto [i, l] = il;
    std::map<std::pair<int, int>, Field::El> acc;
    for (const auto& [lpc, v] : col) {
      auto [lp, c] = lpc;
      auto it2 = h2.find({i, lp});
      if (it2 == h2.end()) continue;
      for (const auto& [lqc2, v2] : it2->second) {
        auto [lq, c2] = lqc2;
        if (c + c2 >= N) continue;
        std::pair<int, int> k{lq, c + c2};
        auto it = acc.find(k);
        Field::El s =
            F.add(it != acc.end() ? it->second : F.zero(), F.mul(v, v2));
        if (!fel_zero(s))
          acc[k] = std::move(s);
        else if (it != acc.end())
          acc.erase(it);
      }
    }
    if (!acc.empty()) out[il] = std::move(acc);
  }
  return out;
}

Hom hom_scale(const Hom& h, const Field::El& s, const Field& F) {
  Hom out;
  for (const auto& [k, col] : h)
    for (const auto& [kk, v] : col) out[k][kk] = F.mul(v, s);
  return out;
}

Hom hom_add(const Hom& h1, const Hom& h2, const Field& F) {
  Hom out;
  for (const Hom* h : {&h1, &h2})
    for (const auto& [k, col] : *h) {
      auto& acc = out[k];
      for (const auto& [kk, v] : col) {
        auto it = acc.find(kk);
        Field::El s = F.add(it != acc.end() ? it->second : F.zero(), v);
        if (!fel_zero(s))
          acc[kk] = std::move(s);
        else if (it != acc.end())
          acc.erase(it);
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

Hom hom_identity(int n0, int d, const Field& F) {
  Hom h;
  Field::El one = F.one();
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l) h[{i, l}][{l, 0}] = one;
  return h;
}

Hom hom_layer_shift(int n0, int d, const Field& F, int shift) {
  Hom h;
  Field::El one = F.one();
  for (int i = 1; i <= n0; ++i)
    for (int l = 0; l < d; ++l) h[{i, l}][{((l + shift) % d + d) % d, 0}] = one;
  return h;
}

Hom eigenprojection(int n0, int d, const Field& F, int sigma, int zeta_exp) {
  Hom acc;
  Field::El invd = F.el({{0, Rat(1, d)}});
  for (int l = 0; l < d; ++l) {
    Field::El coeff = F.mul(invd, F.el({{-sigma * l * zeta_exp, Rat(1)}}));
    acc = hom_add(acc, hom_scale(hom_layer_shift(n0, d, F, l), coeff, F), F);
  }
  return acc;
}

std::map<FlatKey, Field::El> hom_flat(const Hom& h, const FlatKey& tag) {
  std::map<FlatKey, Field::El> out;
  for (const auto& [il, col] : h)
    for (const auto& [lpc, v] : col) {
      FlatKey k = tag;
      k.push_back(lpc.second);  // c
      k.push_back(il.first);    // i
      k.push_back(lpc.first);   // lp
      k.push_back(il.second);   // l
      out[std::move(k)] = v;
    }
  return out;
}

std::vector<std::vector<Field::El>> deg0_matrix(const Hom& h, int n0, int d,
                                                const Field& F) {
  auto idx = [d](int i, int l) { return (i - 1) * d + l; };
  int m = n0 * d;
  std::vector<std::vector<Field::El>> M(m,
                                        std::vector<Field::El>(m, F.zero()));
  for (const auto& [il, col] : h)
    for (const auto& [lpc, v] : col)
      if (lpc.second == 0) {
        auto& cell = M[idx(il.first, lpc.first)][idx(il.first, il.second)];
        cell = F.add(cell, v);
      }
  return M;
}

Field::El det(std::vector<std::vector<Field::El>> M, const Field& F) {
  int n = static_cast<int>(M.size());
  Field::El res = F.one();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n && p < 0; ++r)
      if (!fel_zero(M[r][c])) p = r;
    if (p < 0) return F.zero();
    if (p != c) {
      std::swap(M[c], M[p]);
      res = F.neg(res);
    }
    res = F.mul(res, M[c][c]);
    Field::El inv = F.inv(M[c][c]);
    for (int r = c + 1; r < n; ++r)
      if (!fel_zero(M[r][c])) {
        Field::El f = F.mul(inv, M[r][c]);
        for (int k = c; k < n; ++k)
          M[r][k] = F.add(M[r][k], F.neg(F.mul(f, M[c][k])));
      }
  }
  return res;
}

bool classes_isomorphic(const std::set<int>& I, const std::set<int>& J, int n0,
                        int d, int N, const Field& F, int samples) {
  auto basis = hom_BG_basis(I, J, n0, d, N, F);
  std::vector<std::vector<std::vector<Field::El>>> mats;
  for (const Hom& h : basis) {
    auto M = deg0_matrix(h, n0, d, F);
    bool nz = false;
    for (const auto& row : M)
      for (const auto& v : row)
        if (!fel_zero(v)) nz = true;
    if (nz) mats.push_back(std::move(M));
  }
  if (mats.empty()) return false;
  for (const auto& M : mats)
    if (!fel_zero(det(M, F))) return true;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(1, 997);
  int m = static_cast<int>(mats[0].size());
  for (int s = 0; s < samples; ++s) {
    std::vector<Field::El> coeffs;
    for (size_t k = 0; k < mats.size(); ++k)
      coeffs.push_back(F.el({{0, Rat(dist(rng))}}));
    std::vector<std::vector<Field::El>> M(m,
                                          std::vector<Field::El>(m, F.zero()));
    for (size_t k = 0; k < mats.size(); ++k)
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          M[r][c] = F.add(M[r][c], F.mul(coeffs[k], mats[k][r][c]));
    if (!fel_zero(det(M, F))) return true;
  }
  return false;
}

}  // namespace orbidim
