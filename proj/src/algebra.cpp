#include "orbidim/algebra.hpp"

namespace orbidim {

CyclicQuiver preprojective_quotient(int nverts, int k, int nk) {
  CyclicQuiver q;
  auto mdv = [nverts](int i) { return ((i - 1) % nverts + nverts) % nverts + 1; };
  for (int i = 1; i <= nverts; ++i) q.vertices.push_back(i);
  for (int i = 1; i <= nverts; ++i) {
    q.arrows[{'x', i}] = {mdv(i - 1), i};
    q.arrows[{'y', i}] = {i, mdv(i - 1)};
  }
  Coeff one{{0, Rat(1)}}, mone{{0, Rat(-1)}};
  for (int i = 1; i <= nverts; ++i) {
    q.relations.push_back(
        {{one, {{'y', i}, {'x', i}}},
         {mone, {{'x', mdv(i + 1)}, {'y', mdv(i + 1)}}}});
  }
  for (int i = 1; i <= nverts; ++i) {
    Path<CycArrow> xs, ys;
    for (int t = 1; t <= k; ++t) xs.push_back({'x', mdv(i + t)});
    for (int t = 0; t < nk; ++t) ys.push_back({'y', mdv(i - t)});
    q.relations.push_back({{one, xs}, {mone, ys}});
  }
  return q;
}

}  // namespace orbidim
