#include "orbidim/strandmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace orbidim {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InconsistentMap(msg);
}

// Vertices are visited in the order python's str() sorts their keys:
// all ('pt', p) before ('x', cid), ids compared as decimal strings. Face
// numbering (and every frozen id downstream) depends on this order.
bool vertex_str_less(const MapVertex& a, const MapVertex& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return std::to_string(a.id) < std::to_string(b.id);
}

}  // namespace

std::string face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Boundary: return "boundary";
    case FaceKind::Cyclic: return "cyclic";
    default: return "alternating";
  }
}

std::pair<Visit, Visit> out_in_visits(const Diagram& d, int cid) {
  const Crossing& c = d.crossing(cid);
  int p = c.at;
  std::optional<Visit> res_out, res_in;
  for (const Visit& v : {c.a, c.b}) {
    if (v.pos == 1 && v.strand == p) res_out = v;
    if (v.pos == d.n_visits(v.strand) && d.tau[v.strand - 1] == p) res_in = v;
  }
  // disambiguate when a strand starts and ends at the same point
  if (!res_out || !res_in) {
    for (const Visit& v : {c.a, c.b}) {
      if (v.pos == 1 && !res_out) {
        res_out = v;
      } else if (v.pos == d.n_visits(v.strand) && !res_in &&
                 !(res_out && v == *res_out)) {
        res_in = v;
      }
    }
  }
  require(res_out && res_in && !(*res_out == *res_in),
          "boundary crossing c" + std::to_string(cid) +
              " has no out/in visit pair");
  return {*res_out, *res_in};
}

RotationSystem build_map(const Diagram& d) {
  int n = d.n_points;
  RotationSystem rs;
  for (const auto& [cid, c] : d.crossings)
    if (c.at != 0) rs.point_vertex[c.at] = MapVertex{1, cid};
  for (int p = 1; p <= n; ++p)
    if (!rs.point_vertex.count(p)) rs.point_vertex[p] = MapVertex{0, p};

  for (const auto& [cid, c] : d.crossings) {
    auto [sa, ia] = std::pair{c.a.strand, c.a.pos};
    auto [sb, ib] = std::pair{c.b.strand, c.b.pos};
    if (c.at == 0) {
      Dart a_in = Dart::seg(sa, ia - 1, 1);
      Dart a_out = Dart::seg(sa, ia, 0);
      Dart b_in = Dart::seg(sb, ib - 1, 1);
      Dart b_out = Dart::seg(sb, ib, 0);
      if (c.chir == 'L')
        rs.rot[MapVertex{1, cid}] = {a_in, b_in, a_out, b_out};
      else
        rs.rot[MapVertex{1, cid}] = {a_in, b_out, a_out, b_in};
    } else {
      int p = c.at;
      auto [vo, vi] = out_in_visits(d, cid);
      char eff = c.chir;
      if (!(c.a == vo)) eff = (eff == 'R') ? 'L' : 'R';
      Dart o_out = Dart::seg(vo.strand, vo.pos, 0);  // vo.pos == 1
      Dart i_in = Dart::seg(vi.strand, vi.pos - 1, 1);
      Dart arc_next = Dart::arc(p, 0);
      Dart arc_prev = Dart::arc(p > 1 ? p - 1 : n, 1);
      if (eff == 'R')
        rs.rot[MapVertex{1, cid}] = {arc_next, o_out, i_in, arc_prev};
      else
        rs.rot[MapVertex{1, cid}] = {arc_next, i_in, o_out, arc_prev};
    }
  }
  for (int p = 1; p <= n; ++p) {
    if (rs.point_vertex[p].kind == 0)
      rs.rot[MapVertex{0, p}] = {Dart::arc(p, 0),
                                 Dart::arc(p > 1 ? p - 1 : n, 1)};
  }

  // sanity: every dart emanates from the vertex whose rotation lists it
  auto dart_vertex = [&](const Dart& dd) -> MapVertex {
    if (dd.is_seg()) {
      int jj = dd.j + dd.end;
      require(1 <= jj && jj <= d.n_visits(dd.s), "segment dart out of range");
      return MapVertex{1, d.visits(dd.s)[jj - 1]};
    }
    int q = dd.end == 0 ? dd.s : (dd.s % n) + 1;
    return rs.point_vertex.at(q);
  };
  for (const auto& [v, darts] : rs.rot)
    for (const Dart& dd : darts)
      require(dart_vertex(dd) == v, "rotation system inconsistent");
  return rs;
}

Dart opposite(const Dart& d) {
  Dart o = d;
  o.end = 1 - d.end;
  return o;
}

std::pair<std::vector<Face>, Face> trace_faces(const Diagram& d) {
  RotationSystem rs = build_map(d);
  std::map<Dart, Dart> succ;  // dart -> next dart clockwise at its vertex
  for (const auto& [v, darts] : rs.rot) {
    int k = static_cast<int>(darts.size());
    for (int i = 0; i < k; ++i) succ[darts[i]] = darts[(i + 1) % k];
  }
  std::vector<std::pair<MapVertex, std::vector<Dart>>> order(rs.rot.begin(),
                                                             rs.rot.end());
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) {
              return vertex_str_less(a.first, b.first);
            });
  std::set<Dart> used;
  std::vector<Face> faces;
  for (const auto& [v, darts] : order) {
    for (const Dart& d0 : darts) {
      if (used.count(d0)) continue;
      Face face;
      Dart cur = d0;
      while (true) {
        face.push_back(cur);
        used.insert(cur);
        cur = succ.at(opposite(cur));
        if (cur == d0) break;
        require(!used.count(cur), "face walk does not close");
      }
      faces.push_back(std::move(face));
    }
  }
  // outer face: all arcs, length n, single traversal direction
  std::vector<int> outer_idx;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    const Face& f = faces[i];
    if (static_cast<int>(f.size()) != d.n_points) continue;
    bool all_arc = true;
    std::set<int> ends;
    for (const Dart& dd : f) {
      if (!dd.is_arc()) { all_arc = false; break; }
      ends.insert(dd.end);
    }
    if (all_arc && ends.size() == 1) outer_idx.push_back(i);
  }
  require(!outer_idx.empty(), "no outer face found");
  int chosen = outer_idx[0];
  if (outer_idx.size() > 1) {
    for (int i : outer_idx)
      if (faces[i][0].end == 1) { chosen = i; break; }
  }
  Face outer = faces[chosen];
  faces.erase(faces.begin() + chosen);
  return {faces, outer};
}

FaceData face_data(const Diagram& d) {
  FaceData fd;
  auto [faces, outer] = trace_faces(d);
  fd.faces = std::move(faces);
  fd.outer = std::move(outer);
  for (int i = 0; i < static_cast<int>(fd.faces.size()); ++i)
    for (const Dart& dd : fd.faces[i]) fd.fmap[dd] = i;
  for (const Face& f : fd.faces) {
    bool has_arc = false;
    std::vector<int> dirs;
    for (const Dart& dd : f) {
      if (dd.is_arc())
        has_arc = true;
      else
        dirs.push_back(dd.end == 0 ? 1 : -1);
    }
    FaceKind k;
    if (has_arc)
      k = FaceKind::Boundary;
    else if (!dirs.empty() &&
             std::all_of(dirs.begin(), dirs.end(),
                         [&](int x) { return x == dirs[0]; }))
      k = FaceKind::Cyclic;
    else
      k = FaceKind::Alternating;
    fd.kinds.push_back(k);
  }
  return fd;
}

EulerReport euler_check(const Diagram& d) {
  auto [faces, outer] = trace_faces(d);
  int n = d.n_points;
  std::set<int> at_points;
  for (const auto& [cid, c] : d.crossings)
    if (c.at != 0) at_points.insert(c.at);
  int V = static_cast<int>(d.crossings.size()) +
          (n - static_cast<int>(at_points.size()));
  int nseg = 0;
  for (const auto& vis : d.strands)
    nseg += std::max(static_cast<int>(vis.size()) - 1, 0);
  int E = nseg + n;
  int F = static_cast<int>(faces.size());
  return {V - E + F == 1, V, E, F};
}

// ---- windings ----------------------------------------------------------

int signed_cut_count(const Diagram& d, int s, int seg_lo, int seg_hi) {
  int tot = 0;
  for (const auto& cc : d.cut)
    if (cc.strand == s && seg_lo <= cc.seg && cc.seg <= seg_hi)
      tot += flag_sign(cc.flag);
  return tot;
}

std::vector<std::tuple<int, int, int>> self_crossings(const Diagram& d,
                                                      int s) {
  std::vector<std::tuple<int, int, int>> res;
  std::set<int> seen;
  for (int cid : d.visits(s)) {
    if (!seen.insert(cid).second) continue;
    const Crossing& c = d.crossing(cid);
    if (c.a.strand == s && c.b.strand == s) {
      int i = std::min(c.a.pos, c.b.pos), j = std::max(c.a.pos, c.b.pos);
      res.emplace_back(cid, i, j);
    }
  }
  return res;
}

int S_value(const Diagram& d, int s) {
  int best = 0;
  for (const auto& [cid, i, j] : self_crossings(d, s))
    best = std::max(best, std::abs(signed_cut_count(d, s, i, j - 1)));
  return best;
}

std::vector<DoubleCrossing> double_crossings(const Diagram& d, int s1,
                                             int s2) {
  std::vector<std::tuple<int, int, int>> commons;  // (cid, pos_on_s1, pos_on_s2)
  for (const auto& [cid, c] : d.crossings) {
    std::set<int> ss = {c.a.strand, c.b.strand};
    if (ss == std::set<int>{s1, s2}) {
      int p1 = c.a.strand == s1 ? c.a.pos : c.b.pos;
      int p2 = c.a.strand == s2 ? c.a.pos : c.b.pos;
      commons.emplace_back(cid, p1, p2);
    }
  }
  std::vector<DoubleCrossing> pairs;
  for (size_t i = 0; i < commons.size(); ++i)
    for (size_t j = 0; j < commons.size(); ++j) {
      if (i == j) continue;
      auto [ca, a1, a2] = commons[i];
      auto [cb, b1, b2] = commons[j];
      if (a1 < b1 && a2 < b2) pairs.push_back({ca, cb, a1, b1, a2, b2});
    }
  return pairs;
}

int pair_winding(const Diagram& d, int s1, int s2, const DoubleCrossing& pr) {
  return signed_cut_count(d, s1, pr.a1, pr.b1 - 1) -
         signed_cut_count(d, s2, pr.a2, pr.b2 - 1);
}

int L_value(const Diagram& d, int s1, int s2) {
  int best = 0;
  for (const auto& pr : double_crossings(d, s1, s2))
    best = std::max(best, std::abs(pair_winding(d, s1, s2, pr)));
  return best;
}

int orbifold_threshold(const Diagram& d) {
  int n0 = d.n_points;
  int m = 0;
  for (int s = 1; s <= n0; ++s) m = std::max(m, S_value(d, s));
  for (int s1 = 1; s1 <= n0; ++s1)
    for (int s2 = s1 + 1; s2 <= n0; ++s2) m = std::max(m, L_value(d, s1, s2));
  return m;
}

int strand_winding(const Diagram& d, int s) {
  return signed_cut_count(d, s, 0, d.n_visits(s));
}

// ---- validation --------------------------------------------------------

namespace {

std::vector<std::tuple<int, int>> alternation_report(const Diagram& d) {
  std::vector<std::tuple<int, int>> bad;
  for (int s = 1; s <= d.n_points; ++s) {
    std::vector<char> sides;
    const auto& vis = d.visits(s);
    for (int pos = 1; pos <= static_cast<int>(vis.size()); ++pos) {
      const Crossing& c = d.crossing(vis[pos - 1]);
      if (c.a == Visit{s, pos})
        sides.push_back(c.chir);
      else
        sides.push_back(c.chir == 'R' ? 'L' : 'R');
    }
    for (size_t k = 0; k + 1 < sides.size(); ++k)
      if (sides[k] == sides[k + 1]) {
        bad.emplace_back(s, static_cast<int>(k) + 1);
        break;
      }
  }
  return bad;
}

std::vector<std::array<int, 4>> condition4_violations(const Diagram& d,
                                                      bool weak) {
  std::vector<std::array<int, 4>> bad;
  int n = d.n_points;
  for (int s1 = 1; s1 <= n; ++s1)
    for (int s2 = s1 + 1; s2 <= n; ++s2)
      for (const auto& pr : double_crossings(d, s1, s2))
        if (!weak || pair_winding(d, s1, s2, pr) == 0)
          bad.push_back({s1, s2, pr.ca, pr.cb});
  return bad;
}

std::vector<std::array<int, 4>> condition5_violations(const Diagram& d,
                                                      bool weak) {
  std::vector<std::array<int, 4>> bad;
  auto [faces, outer] = trace_faces(d);
  for (int s = 1; s <= d.n_points; ++s) {
    for (const auto& [cid, i, j] : self_crossings(d, s)) {
      if (weak && signed_cut_count(d, s, i, j - 1) != 0) continue;
      if (j == i + 1) {
        // monogon: a face bounded by segment (s, i) alone
        bool ok = std::any_of(faces.begin(), faces.end(), [&](const Face& f) {
          return f.size() == 1 && f[0].is_seg() && f[0].s == s && f[0].j == i;
        });
        if (ok) continue;
      }
      bad.push_back({s, cid, i, j});
    }
  }
  return bad;
}

ValidationReport validate(const Diagram& d, bool weak) {
  ValidationReport rep;
  rep.euler = euler_check(d).ok;
  rep.alternation = alternation_report(d);
  rep.cond4 = condition4_violations(d, weak);
  rep.cond5 = condition5_violations(d, weak);
  rep.ok = rep.euler && rep.alternation.empty() && rep.cond4.empty() &&
           rep.cond5.empty();
  return rep;
}

}  // namespace

ValidationReport validate_postnikov(const Diagram& d) {
  return validate(d, false);
}

ValidationReport validate_weak_orbifold(const Diagram& d) {
  return validate(d, true);
}

std::pair<bool, int> is_orbifold_diagram(const Diagram& d) {
  int thr = orbifold_threshold(d);
  return {d.order > thr, thr};
}

std::optional<std::pair<int, int>> check_grassmannian(const Diagram& d) {
  int n = d.n_points;
  for (int k = 0; k < n; ++k) {
    bool ok = true;
    for (int i = 1; i <= n; ++i)
      if (d.tau[i - 1] != ((i - 1 + k) % n) + 1) { ok = false; break; }
    if (ok) return std::pair{k, n};
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> grassmannian_type(const Diagram& d) {
  int n0 = d.n_points, dd = d.order;
  for (int i = 1; i <= n0; ++i)
    if (d.tau[i - 1] != i) return std::nullopt;
  std::set<int> ws;
  for (int s = 1; s <= n0; ++s) ws.insert(strand_winding(d, s));
  for (int wp = 1; wp < dd; ++wp) {
    bool ok = true;
    for (int w : ws)
      if (w != wp && w != wp - dd) { ok = false; break; }
    if (ok) return std::array<int, 3>{n0 * wp, n0 * dd, wp};
  }
  return std::nullopt;
}

// ---- quiver support ----------------------------------------------------

CrossingRoles crossing_darts(const Diagram& d, int cid) {
  const Crossing& c = d.crossing(cid);
  CrossingRoles r;
  if (c.at == 0) {
    r.a_in = Dart::seg(c.a.strand, c.a.pos - 1, 1);
    r.a_out = Dart::seg(c.a.strand, c.a.pos, 0);
    r.b_in = Dart::seg(c.b.strand, c.b.pos - 1, 1);
    r.b_out = Dart::seg(c.b.strand, c.b.pos, 0);
  } else {
    int n = d.n_points;
    int p = c.at;
    auto [vo, vi] = out_in_visits(d, cid);
    r.o_out = Dart::seg(vo.strand, vo.pos, 0);
    r.i_in = Dart::seg(vi.strand, vi.pos - 1, 1);
    r.arc_next = Dart::arc(p, 0);
    r.arc_prev = Dart::arc(p > 1 ? p - 1 : n, 1);
  }
  return r;
}

char eff_chir(const Diagram& d, int cid) {
  const Crossing& c = d.crossing(cid);
  if (c.at == 0) return c.chir;
  auto [vo, vi] = out_in_visits(d, cid);
  char eff = c.chir;
  if (!(c.a == vo)) eff = (eff == 'R') ? 'L' : 'R';
  return eff;
}

std::map<int, std::pair<int, int>> quiver_arrows(const Diagram& d,
                                                 const FaceData& fd) {
  std::map<int, std::pair<int, int>> out;
  for (const auto& [cid, c] : d.crossings) {
    CrossingRoles r = crossing_darts(d, cid);
    char ch = eff_chir(d, cid);
    int src, tgt;
    if (c.at == 0) {
      if (ch == 'L') {  // clockwise order (a_in, b_in, a_out, b_out)
        src = fd.fmap.at(r.b_in);
        tgt = fd.fmap.at(r.b_out);
      } else {          // (a_in, b_out, a_out, b_in)
        src = fd.fmap.at(r.a_in);
        tgt = fd.fmap.at(r.a_out);
      }
    } else {
      if (ch == 'R') {  // (arc_next, o_out, i_in, arc_prev)
        src = fd.fmap.at(r.arc_prev);
        tgt = fd.fmap.at(r.o_out);
      } else {          // (arc_next, i_in, o_out, arc_prev)
        src = fd.fmap.at(r.i_in);
        tgt = fd.fmap.at(r.arc_prev);
      }
    }
    out[cid] = {src, tgt};
  }
  return out;
}

namespace {
// Crossing at the head (end vertex) of a segment dart.
int dart_head_crossing(const Diagram& d, const Dart& dd) {
  int pos = dd.end == 0 ? dd.j + 1 : dd.j;
  return d.visits(dd.s)[pos - 1];
}
}  // namespace

std::vector<FundCycle> fundamental_cycles(
    const Diagram& d, const FaceData& fd,
    const std::map<int, std::pair<int, int>>& arrows) {
  std::vector<FundCycle> res;
  for (int F = 0; F < static_cast<int>(fd.faces.size()); ++F) {
    if (fd.kinds[F] != FaceKind::Cyclic) continue;
    const Face& f = fd.faces[F];
    int sign = f[0].end == 0 ? 1 : -1;  // end 0 throughout <=> counterclockwise
    std::vector<int> cids;
    for (const Dart& dd : f) cids.push_back(dart_head_crossing(d, dd));
    require(std::set<int>(cids.begin(), cids.end()).size() == cids.size(),
            "repeated crossing on a cyclic face");
    if (cids.size() > 1) {
      std::vector<int> order = {cids[0]};
      std::set<int> rest(cids.begin() + 1, cids.end());
      while (!rest.empty()) {
        std::vector<int> nxt;
        for (int c2 : rest)
          if (arrows.at(c2).first == arrows.at(order.back()).second)
            nxt.push_back(c2);
        require(nxt.size() == 1, "fundamental cycle does not chain");
        order.push_back(nxt[0]);
        rest.erase(nxt[0]);
      }
      require(arrows.at(order.back()).second == arrows.at(order[0]).first,
              "fundamental cycle does not close");
      cids = order;
    } else {
      require(arrows.at(cids[0]).first == arrows.at(cids[0]).second,
              "single-crossing cycle is not a loop");
    }
    res.push_back({F, sign, cids});
  }
  return res;
}

// ---- rotation symmetry -------------------------------------------------

std::optional<Rotation> find_rotation(const Diagram& d, int s_order) {
  int n = d.n_points;
  if (s_order <= 0 || n % s_order != 0) return std::nullopt;
  int shift = n / s_order;
  // strand start points: first visit must be a boundary crossing
  std::map<int, int> starts, bypoint;
  for (int s = 1; s <= n; ++s) {
    const auto& vis = d.visits(s);
    if (vis.empty()) return std::nullopt;
    int at = d.crossing(vis[0]).at;
    if (at == 0) return std::nullopt;
    starts[s] = at;
    if (bypoint.count(at)) return std::nullopt;
    bypoint[at] = s;
  }
  Rotation rot;
  for (const auto& [s, p] : starts) {
    int q = (p - 1 + shift) % n + 1;
    auto it = bypoint.find(q);
    if (it == bypoint.end()) return std::nullopt;
    rot.smap[s] = it->second;
  }
  // crossing map via visits
  std::map<int, std::vector<std::pair<int, int>>> visits_of;
  for (int s = 1; s <= n; ++s) {
    const auto& vis = d.visits(s);
    for (int i = 0; i < static_cast<int>(vis.size()); ++i)
      visits_of[vis[i]].emplace_back(s, i);
  }
  for (const auto& [c, vv] : visits_of) {
    std::set<int> imgs;
    for (const auto& [s, i] : vv) {
      const auto& tvis = d.visits(rot.smap[s]);
      if (i >= static_cast<int>(tvis.size())) return std::nullopt;
      imgs.insert(tvis[i]);
    }
    if (imgs.size() != 1) return std::nullopt;
    rot.cmap[c] = *imgs.begin();
  }
  std::set<int> vals;
  for (const auto& [c, c2] : rot.cmap) vals.insert(c2);
  if (vals.size() != rot.cmap.size()) return std::nullopt;
  for (const auto& [c, c2] : rot.cmap) {
    const Crossing& r1 = d.crossing(c);
    const Crossing& r2 = d.crossing(c2);
    Visit ia{rot.smap[r1.a.strand], r1.a.pos};
    Visit ib{rot.smap[r1.b.strand], r1.b.pos};
    if (r2.a == ia && r2.b == ib) {
      if (r1.chir != r2.chir) return std::nullopt;
    } else if (r2.a == ib && r2.b == ia) {
      // swapping the roles of the two visits flips chirality
      if (r1.chir == r2.chir) return std::nullopt;
    } else {
      return std::nullopt;
    }
    if ((r1.at == 0) != (r2.at == 0)) return std::nullopt;
    if (r1.at != 0 && (r1.at - 1 + shift) % n + 1 != r2.at)
      return std::nullopt;
  }
  for (int i = 1; i <= n; ++i) {
    int j = (i - 1 + shift) % n + 1;
    if ((d.tau[i - 1] - 1 + shift) % n + 1 != d.tau[j - 1])
      return std::nullopt;
  }
  return rot;
}

std::map<int, int> face_rotation(const Diagram& d, const FaceData& fd,
                                 int s_order) {
  auto rot = find_rotation(d, s_order);
  require(rot.has_value(), "diagram is not rotation symmetric");
  int n = d.n_points;
  int shift = n / s_order;
  std::map<int, int> perm;
  for (int fid = 0; fid < static_cast<int>(fd.faces.size()); ++fid) {
    const Dart& dd = fd.faces[fid][0];
    Dart img;
    if (dd.is_arc())
      img = Dart::arc((dd.s - 1 + shift) % n + 1, dd.end);
    else
      img = Dart::seg(rot->smap.at(dd.s), dd.j, dd.end);
    perm[fid] = fd.fmap.at(img);
  }
  std::set<int> vals;
  for (const auto& [a, b] : perm) vals.insert(b);
  require(vals.size() == perm.size(), "face rotation is not a bijection");
  return perm;
}

}  // namespace orbidim
