#include "orbidim/orbifold.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "orbidim/labels.hpp"

namespace orbidim {

namespace {

// copy step when traversing a segment forward: 'R' means the strand passes
// the cut from the cut's left to its right, step +1
std::map<std::pair<int, int>, int> cut_steps(const Diagram& d) {
  std::map<std::pair<int, int>, int> steps;
  for (const auto& cc : d.cut)
    steps[{cc.strand, cc.seg}] += flag_sign(cc.flag);
  return steps;
}

void swap_to_order(Visit& va, Visit& vb, char& chir) {
  if (vb < va) {
    std::swap(va, vb);
    chir = chir == 'R' ? 'L' : 'R';
  }
}

}  // namespace

std::map<std::pair<int, int>, int> pre_offsets(const Diagram& d) {
  auto steps = cut_steps(d);
  std::map<std::pair<int, int>, int> pre;
  for (int s = 1; s <= d.n_points; ++s) {
    int V = d.n_visits(s);
    int acc = 0;
    for (int p = 1; p <= V; ++p) {
      pre[{s, p}] = acc;
      auto it = steps.find({s, p});
      if (it != steps.end()) acc += it->second;
    }
    pre[{s, V + 1}] = acc;
  }
  return pre;
}

Diagram sym_d(const Diagram& diag, int d) {
  if (diag.kind != "orbifold")
    throw BadOrder("sym_d requires an orbifold diagram");
  int n0 = diag.n_points;
  if (d == 0) d = diag.order;
  if (d < 2) throw BadOrder("cover order must be >= 2");
  int n = n0 * d;
  auto pre = pre_offsets(diag);
  auto off = [&](int s, int p) { return pre.at({s, p}); };

  Diagram cov;
  cov.kind = "postnikov";
  cov.n_points = n;
  cov.order = 1;

  // cover crossing ids: (cid, m) -> dense new id in (cid, m) order
  std::map<std::pair<int, int>, int> newid;
  for (const auto& [cid, c] : diag.crossings)
    for (int m = 0; m < d; ++m)
      newid[{cid, m}] = static_cast<int>(newid.size()) + 1;

  // strands: cover strand s + l*n0 starts at point s + l*n0
  cov.strands.resize(n);
  for (int l = 0; l < d; ++l)
    for (int s = 1; s <= n0; ++s) {
      const auto& vis = diag.visits(s);
      std::vector<int> cvis;
      for (int p = 1; p <= static_cast<int>(vis.size()); ++p) {
        int m = ((l + off(s, p)) % d + d) % d;
        cvis.push_back(newid.at({vis[p - 1], m}));
      }
      cov.strands[s + l * n0 - 1] = std::move(cvis);
    }

  // tau: total winding shifts the target copy
  cov.tau.resize(n);
  for (int l = 0; l < d; ++l)
    for (int s = 1; s <= n0; ++s) {
      int V = diag.n_visits(s);
      int wt = off(s, V + 1);
      int t0 = diag.tau[s - 1];
      cov.tau[s + l * n0 - 1] = md(t0 + (l + wt) * n0, n);
    }

  for (const auto& [cid, rec] : diag.crossings) {
    for (int m = 0; m < d; ++m) {
      int l1 = ((m - off(rec.a.strand, rec.a.pos)) % d + d) % d;
      int l2 = ((m - off(rec.b.strand, rec.b.pos)) % d + d) % d;
      Visit va{rec.a.strand + l1 * n0, rec.a.pos};
      Visit vb{rec.b.strand + l2 * n0, rec.b.pos};
      char chir = rec.chir;
      swap_to_order(va, vb, chir);
      Crossing nc{va, vb, chir, 0};
      if (rec.at != 0) {
        auto [vo, vi] = out_in_visits(diag, cid);
        int lo = ((m - off(vo.strand, vo.pos)) % d + d) % d;
        nc.at = md(rec.at + lo * n0, n);
      }
      cov.crossings.emplace(newid.at({cid, m}), nc);
    }
  }
  check_structure(cov);
  return cov;
}

std::string canonical_key(const Diagram& diag) {
  std::map<int, int> order;
  for (const auto& vis : diag.strands)
    for (int c : vis)
      if (!order.count(c)) order[c] = static_cast<int>(order.size()) + 1;
  for (const auto& [cid, c] : diag.crossings)
    if (!order.count(cid)) order[cid] = static_cast<int>(order.size()) + 1;

  std::ostringstream key;
  key << diag.kind << "|" << diag.n_points << "|" << diag.order << "|t";
  for (int t : diag.tau) key << " " << t;
  key << "|s";
  for (const auto& vis : diag.strands) {
    key << " (";
    for (int c : vis) key << order.at(c) << ",";
    key << ")";
  }
  std::vector<std::pair<int, int>> by_order;  // (new id, old id)
  for (const auto& [cid, c] : diag.crossings)
    by_order.emplace_back(order.at(cid), cid);
  std::sort(by_order.begin(), by_order.end());
  key << "|c";
  for (const auto& [nid, cid] : by_order) {
    const Crossing& c = diag.crossings.at(cid);
    key << " " << nid << ":(" << c.a.strand << "," << c.a.pos << ")("
        << c.b.strand << "," << c.b.pos << ")" << c.chir << "@" << c.at;
  }
  return key.str();
}

Diagram rotate_diag(const Diagram& diag, int r) {
  int n = diag.n_points;
  auto sh = [&](int p) { return md(p + r, n); };
  Diagram out;
  out.kind = diag.kind;
  out.n_points = n;
  out.order = diag.order;
  out.tau.resize(n);
  out.strands.resize(n);
  for (int i = 1; i <= n; ++i) {
    out.strands[sh(i) - 1] = diag.strands[i - 1];
    out.tau[sh(i) - 1] = sh(diag.tau[i - 1]);
  }
  for (const auto& [cid, rec] : diag.crossings) {
    Visit va{sh(rec.a.strand), rec.a.pos};
    Visit vb{sh(rec.b.strand), rec.b.pos};
    char chir = rec.chir;
    swap_to_order(va, vb, chir);
    Crossing nc{va, vb, chir, rec.at != 0 ? sh(rec.at) : 0};
    out.crossings.emplace(cid, nc);
  }
  return out;
}

bool isomorphic(const Diagram& d1, const Diagram& d2) {
  if (d1.kind != d2.kind || d1.n_points != d2.n_points) return false;
  std::string k2 = canonical_key(d2);
  for (int r = 0; r < d1.n_points; ++r)
    if (canonical_key(rotate_diag(d1, r)) == k2) return true;
  return false;
}

Diagram quotient(const Diagram& diag, int d) {
  int n = diag.n_points;
  if (d < 2 || n % d != 0) throw BadOrder("order must divide points");
  int n0 = n / d;
  auto rot = find_rotation(diag, d);
  if (!rot) throw NotEquivariant("diagram is not rotation symmetric");

  // crossing orbits under the rotation
  std::map<int, int> orbit_rep;
  for (const auto& [c0, c] : diag.crossings) {
    if (orbit_rep.count(c0)) continue;
    std::vector<int> orb{c0};
    int x = rot->cmap.at(c0);
    while (x != c0) {
      orb.push_back(x);
      x = rot->cmap.at(x);
    }
    int rep = *std::min_element(orb.begin(), orb.end());
    for (int y : orb) orbit_rep[y] = rep;
  }
  std::set<int> reps;
  for (const auto& [y, r] : orbit_rep) reps.insert(r);
  std::map<int, int> newid;
  for (int r : reps) newid[r] = static_cast<int>(newid.size()) + 1;

  Diagram out;
  out.kind = "orbifold";
  out.n_points = n0;
  out.order = d;
  for (int s = 1; s <= n0; ++s) {
    std::vector<int> vis;
    for (int c : diag.strands[s - 1]) vis.push_back(newid.at(orbit_rep.at(c)));
    out.strands.push_back(std::move(vis));
    out.tau.push_back(md(diag.tau[s - 1], n0));
  }
  for (int r : reps) {
    const Crossing& rec = diag.crossings.at(r);
    Visit va{md(rec.a.strand, n0), rec.a.pos};
    Visit vb{md(rec.b.strand, n0), rec.b.pos};
    char chir = rec.chir;
    swap_to_order(va, vb, chir);
    Crossing nc{va, vb, chir, rec.at != 0 ? md(rec.at, n0) : 0};
    out.crossings.emplace(newid.at(r), nc);
  }

  // cut: shortest face path from the image of the cover's rotation-fixed
  // face to the boundary face at arc n0
  FaceData fdC = face_data(diag);
  auto perm = face_rotation(diag, fdC, d);
  std::vector<int> fixed;
  for (const auto& [f, g] : perm) {
    if (f != g) continue;
    bool all_seg = true;
    for (const Dart& x : fdC.faces[f])
      if (!x.is_seg()) all_seg = false;
    if (all_seg) fixed.push_back(f);
  }
  if (fixed.size() != 1)
    throw NotEquivariant("no unique rotation-fixed interior face");
  Dart dart = fdC.faces[fixed[0]][0];
  Dart qdart = Dart::seg(md(dart.s, n0), dart.j, dart.end);

  FaceData fdQ = face_data(out);
  int start = fdQ.fmap.at(qdart);
  int target = -1;
  for (int e : {0, 1}) {
    auto it = fdQ.fmap.find(Dart::arc(n0, e));
    if (it != fdQ.fmap.end()) target = it->second;
  }
  if (target < 0) throw NotEquivariant("boundary face at arc n0 not found");

  std::map<int, std::vector<std::pair<int, CutCrossing>>> adj;
  for (int s = 1; s <= n0; ++s) {
    int V = out.n_visits(s);
    for (int j = 1; j < V; ++j) {
      int lf = fdQ.fmap.at(Dart::seg(s, j, 0));
      int rf = fdQ.fmap.at(Dart::seg(s, j, 1));
      if (lf != rf) {
        adj[lf].push_back({rf, {s, j, 'L'}});
        adj[rf].push_back({lf, {s, j, 'R'}});
      }
    }
  }
  std::map<int, std::optional<std::pair<int, CutCrossing>>> prev;
  prev[start] = std::nullopt;
  std::deque<int> q{start};
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    if (f == target) break;
    for (const auto& [g, step] : adj[f])
      if (!prev.count(g)) {
        prev[g] = std::make_pair(f, step);
        q.push_back(g);
      }
  }
  if (!prev.count(target)) throw NotEquivariant("no cut path found");
  std::vector<CutCrossing> path;
  int f = target;
  while (prev.at(f).has_value()) {
    auto [g, step] = *prev.at(f);
    path.push_back(step);
    f = g;
  }
  std::reverse(path.begin(), path.end());
  out.cut = std::move(path);
  check_structure(out);
  return out;
}

// ---- reduction ---------------------------------------------------------

namespace {

// Delete the crossings in R; visit positions and cut segments renumber.
Diagram remove_crossings(const Diagram& diag, const std::set<int>& R) {
  Diagram out;
  out.kind = diag.kind;
  out.n_points = diag.n_points;
  out.order = diag.order;
  out.tau = diag.tau;
  // removed_before[s][p] = #removed visits on strand s at positions < p
  std::map<int, std::vector<int>> removed_before;
  for (int s = 1; s <= diag.n_points; ++s) {
    const auto& vis = diag.visits(s);
    std::vector<int> rb(vis.size() + 2, 0);
    for (int p = 1; p <= static_cast<int>(vis.size()) + 1; ++p)
      rb[p] = rb[p - 1] + (p > 1 && R.count(vis[p - 2]) ? 1 : 0);
    removed_before[s] = rb;
    std::vector<int> nv;
    for (int c : vis)
      if (!R.count(c)) nv.push_back(c);
    out.strands.push_back(std::move(nv));
  }
  for (const auto& [cid, rec] : diag.crossings) {
    if (R.count(cid)) continue;
    Crossing nc = rec;
    nc.a.pos -= removed_before.at(nc.a.strand)[nc.a.pos];
    nc.b.pos -= removed_before.at(nc.b.strand)[nc.b.pos];
    out.crossings.emplace(cid, nc);
  }
  for (const auto& cc : diag.cut) {
    // a cut on segment j (between visits j and j+1) survives on the merged
    // segment when either endpoint visit is deleted
    int nj = cc.seg - removed_before.at(cc.strand)[cc.seg + 1];
    out.cut.push_back({cc.strand, nj, cc.flag});
  }
  check_structure(out);
  return out;
}

// endpoints (crossing ids) of segment j of strand s
std::pair<int, int> segment_ends(const Diagram& d, int s, int j) {
  const auto& vis = d.visits(s);
  return {vis[j - 1], vis[j]};
}

}  // namespace

std::pair<Diagram, std::vector<ReduceMove>> reduce(const Diagram& diag) {
  Diagram cur = diag;
  std::vector<ReduceMove> log;
  bool progress = true;
  while (progress) {
    progress = false;
    FaceData fd = face_data(cur);
    int omega = -1;
    if (cur.kind == "orbifold" && !cur.cut.empty()) omega = omega_face(cur, fd);
    for (int i = 0; i < static_cast<int>(fd.faces.size()) && !progress; ++i) {
      const Face& f = fd.faces[i];
      if (i == omega) continue;
      bool all_seg = true;
      for (const Dart& x : f)
        if (!x.is_seg()) all_seg = false;
      if (!all_seg) continue;
      if (f.size() == 1) {
        // move (ii): empty self-crossing loop
        auto [c1, c2] = segment_ends(cur, f[0].s, f[0].j);
        if (c1 != c2 || cur.crossing(c1).at != 0) continue;
        cur = remove_crossings(cur, {c1});
        log.push_back({"loop", {c1}});
        progress = true;
      } else if (f.size() == 2) {
        // move (i): bigon between two crossings; if one of them sits on the
        // boundary only the interior one is deleted
        auto [a1, a2] = segment_ends(cur, f[0].s, f[0].j);
        auto [b1, b2] = segment_ends(cur, f[1].s, f[1].j);
        if (a1 == a2 || std::minmax(a1, a2) != std::minmax(b1, b2)) continue;
        std::set<int> R;
        for (int c : {a1, a2})
          if (cur.crossing(c).at == 0) R.insert(c);
        if (R.empty()) continue;
        cur = remove_crossings(cur, R);
        log.push_back({"bigon", {R.begin(), R.end()}});
        progress = true;
      }
    }
  }
  return {cur, log};
}

}  // namespace orbidim
