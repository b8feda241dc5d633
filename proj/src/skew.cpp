#include "orbidim/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbidim {

std::vector<long> skew_basic_dims(const Diagram& cover, int d, int m,
                                  const Field& field) {
  QP q = build_qp(cover);
  auto relmap = relations(q);
  std::vector<Relation<QArrow>> rels;
  for (const auto& [a, ts] : relmap) rels.push_back(ts);
  auto perm = face_rotation(cover, q.fd, d);

  std::set<int> seen;
  std::vector<int> free_reps, fixed;
  for (const auto& [f, c] : q.vertices) {
    if (seen.count(f)) continue;
    std::vector<int> orb{f};
    int x = perm.at(f);
    while (x != f) {
      orb.push_back(x);
      x = perm.at(x);
    }
    seen.insert(orb.begin(), orb.end());
    int rep = *std::min_element(orb.begin(), orb.end());
    if (static_cast<int>(orb.size()) == d)
      free_reps.push_back(rep);
    else if (orb.size() == 1)
      fixed.push_back(rep);
    else
      throw std::runtime_error("vertex orbit of unexpected size");
  }

  auto pd = filtered_dims_pairblocks(q.vertices, q.arrows, rels, m, field);
  auto rot = [&](int f, int r) {
    for (int i = 0; i < r; ++i) f = perm.at(f);
    return f;
  };

  std::vector<long> dims(m + 1, 0);
  for (int j = 0; j <= m; ++j) {
    long tot = 0;
    for (int u : free_reps)
      for (int v : free_reps)
        for (int r = 0; r < d; ++r)
          tot += pd.at({{u, 0}, {rot(v, r), 0}})[j];
    for (int u : free_reps)
      for (int v : fixed)
        tot += d * (pd.at({{u, 0}, {v, 0}})[j] + pd.at({{v, 0}, {u, 0}})[j]);
    for (int v : fixed)
      for (int w : fixed) tot += d * pd.at({{v, 0}, {w, 0}})[j];
    dims[j] = tot;
  }
  return dims;
}

}  // namespace orbidim
