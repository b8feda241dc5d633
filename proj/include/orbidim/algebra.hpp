#pragma once
// Exact linear algebra in truncated path algebras over Q(zeta_d):
// incremental sparse row reduction, path enumeration, filtered dimension
// vectors of quotients by two-sided ideals, and the preprojective-style
// cyclic quiver presentation used for boundary algebras.
//
// Templated on the arrow-id type A (and vertex type V): quiver-with-potential
// arrows are (crossing, copy) pairs, cyclic-quiver arrows are (kind, index)
// pairs. Row keys are paths (vectors of A) under lexicographic order; the
// pivot column of a row is its minimal key.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "orbidim/field.hpp"

namespace orbidim {

using Coeff = std::map<int, Rat>;  // zeta exponent -> rational

template <class K>
class SparseRREF {
 public:
  using Row = std::map<K, Field::El>;

  explicit SparseRREF(const Field& f) : F(&f) {}

  // Reduces a row against the pivots; returns (true, pivot col, normalized
  // row) for an independent row, false otherwise.
  bool reduce_row(Row row, K* col_out, Row* row_out) const {
    while (!row.empty()) {
      const K c = row.begin()->first;
      auto pit = pivots.find(c);
      if (pit == pivots.end()) {
        Field::El iv = F->inv(row.begin()->second);
        for (auto& [k, v] : row) v = F->mul(v, iv);
        if (col_out) *col_out = c;
        if (row_out) *row_out = std::move(row);
        return true;
      }
      Field::El nf = F->neg(row.begin()->second);
      row.erase(row.begin());
      for (const auto& [k, v] : pit->second) {
        if (k == c) continue;
        auto it = row.find(k);
        Field::El nv =
            F->add(it != row.end() ? it->second : F->zero(), F->mul(nf, v));
        if (!fel_zero(nv))
          row[k] = std::move(nv);
        else if (it != row.end())
          row.erase(it);
      }
    }
    return false;
  }

  bool add_row(Row row) {
    K c{};
    Row red;
    if (!reduce_row(std::move(row), &c, &red)) return false;
    pivots.emplace(std::move(c), std::move(red));
    return true;
  }

  long rank() const { return static_cast<long>(pivots.size()); }

  // Fully substitutes pivots into vec; the result has no pivot columns.
  Row reduce_full(Row vec) const {
    Row done;
    while (!vec.empty()) {
      auto it = vec.begin();
      K c = it->first;
      Field::El v = it->second;
      vec.erase(it);
      if (fel_zero(v)) continue;
      auto pit = pivots.find(c);
      if (pit == pivots.end()) {
        done[c] = v;
        continue;
      }
      Field::El nv = F->neg(v);
      for (const auto& [k, w] : pit->second) {
        if (k == c) continue;
        auto jt = vec.find(k);
        Field::El acc =
            F->add(jt != vec.end() ? jt->second : F->zero(), F->mul(nv, w));
        if (!fel_zero(acc))
          vec[k] = std::move(acc);
        else if (jt != vec.end())
          vec.erase(jt);
      }
    }
    return done;
  }

  bool has_pivot(const K& c) const { return pivots.count(c) != 0; }
  const std::map<K, Row>& all_pivots() const { return pivots; }

 private:
  const Field* F;
  std::map<K, Row> pivots;
};

template <class A>
using Path = std::vector<A>;

template <class A>
using Relation = std::vector<std::pair<Coeff, Path<A>>>;

// All paths of length <= m as (src, tgt, arrow list), length 0 included.
template <class V, class A>
std::vector<std::tuple<V, V, Path<A>>> enumerate_paths(
    const std::vector<V>& vertices, const std::map<A, std::pair<V, V>>& arrows,
    int m) {
  std::map<V, std::vector<std::pair<A, V>>> out_arrows;
  for (const auto& [aid, st] : arrows)
    out_arrows[st.first].emplace_back(aid, st.second);
  std::vector<std::tuple<V, V, Path<A>>> paths, frontier;
  for (const V& v : vertices) {
    paths.emplace_back(v, v, Path<A>{});
    frontier.emplace_back(v, v, Path<A>{});
  }
  for (int step = 0; step < m && !frontier.empty(); ++step) {
    std::vector<std::tuple<V, V, Path<A>>> nxt;
    for (const auto& [s, t, p] : frontier)
      for (const auto& [aid, t2] : out_arrows[t]) {
        Path<A> q = p;
        q.push_back(aid);
        nxt.emplace_back(s, t2, std::move(q));
      }
    paths.insert(paths.end(), nxt.begin(), nxt.end());
    frontier = std::move(nxt);
  }
  return paths;
}

namespace detail {

// Feeds every (prefix * relation * suffix) row of total length <= j into the
// sink; sink(src, tgt, row).
template <class V, class A, class Sink>
void relation_rows(
    const std::vector<std::tuple<V, V, Path<A>>>& paths,
    const std::map<A, std::pair<V, V>>& arrows,
    const std::vector<Relation<A>>& relations, int j, const Field& F,
    Sink&& sink) {
  std::map<V, std::vector<std::tuple<int, Path<A>, V>>> into, outof;
  for (const auto& [s, t, p] : paths) {
    into[t].emplace_back(static_cast<int>(p.size()), p, s);
    outof[s].emplace_back(static_cast<int>(p.size()), p, t);
  }
  for (const auto& rterms : relations) {
    const Path<A>& p0 = rterms.front().second;
    V rsrc = arrows.at(p0.front()).first;
    V rtgt = arrows.at(p0.back()).second;
    int minrel = static_cast<int>(p0.size());
    for (const auto& [cf, rp] : rterms)
      minrel = std::min(minrel, static_cast<int>(rp.size()));
    for (const auto& [lp, pre, psrc] : into[rsrc]) {
      if (lp + minrel > j) continue;
      for (const auto& [lq, post, qtgt] : outof[rtgt]) {
        if (lp + minrel + lq > j) continue;
        typename SparseRREF<Path<A>>::Row row;
        for (const auto& [cf, rp] : rterms) {
          if (lp + static_cast<int>(rp.size()) + lq > j) continue;
          Path<A> key = pre;
          key.insert(key.end(), rp.begin(), rp.end());
          key.insert(key.end(), post.begin(), post.end());
          Field::El val = F.el(cf);
          auto it = row.find(key);
          if (it != row.end()) val = F.add(it->second, val);
          row[std::move(key)] = val;
        }
        for (auto it = row.begin(); it != row.end();)
          it = fel_zero(it->second) ? row.erase(it) : std::next(it);
        if (!row.empty()) sink(psrc, qtgt, std::move(row));
      }
    }
  }
}

}  // namespace detail

// dim of span(paths of length <= j) modulo the ideal, for j = 0..m.
template <class V, class A>
std::vector<long> filtered_dims(const std::vector<V>& vertices,
                                const std::map<A, std::pair<V, V>>& arrows,
                                const std::vector<Relation<A>>& relations,
                                int m, const Field& F) {
  auto paths = enumerate_paths(vertices, arrows, m);
  std::vector<long> dims;
  for (int j = 0; j <= m; ++j) {
    long npaths = 0;
    for (const auto& [s, t, p] : paths)
      if (static_cast<int>(p.size()) <= j) ++npaths;
    SparseRREF<Path<A>> rref(F);
    detail::relation_rows(paths, arrows, relations, j, F,
                          [&](const V&, const V&, auto row) {
                            rref.add_row(std::move(row));
                          });
    dims.push_back(npaths - rref.rank());
  }
  return dims;
}

// Per-(src, tgt) filtered dims; ideal generators never mix endpoint blocks.
template <class V, class A>
std::map<std::pair<V, V>, std::vector<long>> filtered_dims_pairblocks(
    const std::vector<V>& vertices, const std::map<A, std::pair<V, V>>& arrows,
    const std::vector<Relation<A>>& relations, int m, const Field& F) {
  auto paths = enumerate_paths(vertices, arrows, m);
  std::map<std::pair<V, V>, std::vector<long>> res;
  for (const V& u : vertices)
    for (const V& v : vertices) res[{u, v}] = std::vector<long>(m + 1, 0);
  for (int j = 0; j <= m; ++j) {
    std::map<std::pair<V, V>, long> counts;
    for (const auto& [s, t, p] : paths)
      if (static_cast<int>(p.size()) <= j) ++counts[{s, t}];
    std::map<std::pair<V, V>, SparseRREF<Path<A>>> rrefs;
    detail::relation_rows(paths, arrows, relations, j, F,
                          [&](const V& ps, const V& qt, auto row) {
                            auto it = rrefs.try_emplace({ps, qt}, F).first;
                            it->second.add_row(std::move(row));
                          });
    for (auto& [uv, dims] : res) {
      long r = 0;
      auto it = rrefs.find(uv);
      if (it != rrefs.end()) r = it->second.rank();
      dims[j] = counts[uv] - r;
    }
  }
  return res;
}

// Cyclic quiver on nverts vertices with arrows x_i: i-1 -> i, y_i: i -> i-1,
// commutator relations at every vertex and (k x-steps) = (nk y-steps) from
// every vertex.
using CycArrow = std::pair<char, int>;  // ('x' or 'y', index 1..nverts)
struct CyclicQuiver {
  std::vector<int> vertices;
  std::map<CycArrow, std::pair<int, int>> arrows;
  std::vector<Relation<CycArrow>> relations;
};
CyclicQuiver preprojective_quotient(int nverts, int k, int nk);

}  // namespace orbidim
