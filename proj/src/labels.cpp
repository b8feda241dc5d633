#include "orbidim/labels.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbidim/orbifold.hpp"

namespace orbidim {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error("labeling: " + msg);
}

Side opp(Side s) { return s == Side::CW ? Side::CCW : Side::CW; }

// Two-coloring of faces flipping across the segments of strand s, seeded by
// "the face on the forward-dart side of every segment of s is left".
// Returns face -> true iff colored 'left'; faces unreachable from the seeds
// keep no entry.
std::map<int, bool> strand_two_coloring(const Diagram& d, const FaceData& fd,
                                        int s) {
  std::map<int, std::vector<std::pair<int, bool>>> adj;  // face -> (face, flip)
  for (int ss = 1; ss <= d.n_points; ++ss) {
    int V = d.n_visits(ss);
    for (int j = 1; j < V; ++j) {
      int f1 = fd.fmap.at(Dart::seg(ss, j, 0));
      int f2 = fd.fmap.at(Dart::seg(ss, j, 1));
      adj[f1].emplace_back(f2, ss == s);
      adj[f2].emplace_back(f1, ss == s);
    }
  }
  for (int p = 1; p <= d.n_points; ++p) {
    auto i1 = fd.fmap.find(Dart::arc(p, 0));
    auto i2 = fd.fmap.find(Dart::arc(p, 1));
    if (i1 != fd.fmap.end() && i2 != fd.fmap.end() &&
        i1->second != i2->second) {
      adj[i1->second].emplace_back(i2->second, false);
      adj[i2->second].emplace_back(i1->second, false);
    }
  }
  std::map<int, bool> color;  // true = left
  std::vector<int> stack;
  for (int j = 1; j < d.n_visits(s); ++j) {
    int f = fd.fmap.at(Dart::seg(s, j, 0));
    if (!color.count(f)) {
      color[f] = true;
      stack.push_back(f);
    }
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const auto& [g, flip] : adj[f]) {
      bool want = flip ? !color[f] : color[f];
      auto it = color.find(g);
      if (it != color.end()) {
        require(it->second == want, "inconsistent strand coloring");
      } else {
        color[g] = want;
        stack.push_back(g);
      }
    }
  }
  return color;
}

}  // namespace

std::map<int, std::vector<int>> postnikov_labels(const Diagram& d) {
  FaceData fd = face_data(d);
  std::map<int, std::set<int>> labels;
  for (int s = 1; s <= d.n_points; ++s) {
    auto color = strand_two_coloring(d, fd, s);
    for (int i = 0; i < static_cast<int>(fd.faces.size()); ++i) {
      if (fd.kinds[i] == FaceKind::Cyclic) continue;
      auto it = color.find(i);
      if (it != color.end() && it->second) labels[i].insert(s);
    }
  }
  std::map<int, std::vector<int>> out;
  for (const auto& [i, v] : labels)
    out[i] = std::vector<int>(v.begin(), v.end());
  return out;
}

std::vector<int> rotate_set(const std::vector<int>& I, int n0, int n) {
  std::vector<int> out;
  for (int x : I) out.push_back((x - 1 + n0) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> label_class(const std::vector<int>& I, int n0,
                                          int n) {
  std::set<std::vector<int>> orbit;
  std::vector<int> J(I);
  std::sort(J.begin(), J.end());
  std::vector<int> start = J;
  while (true) {
    orbit.insert(J);
    J = rotate_set(J, n0, n);
    if (J == start) break;
  }
  return {orbit.begin(), orbit.end()};
}

SegmentLabels segment_labels(const Diagram& d) {
  int n0 = d.n_points;
  int n = n0 * d.order;
  SegmentLabels out;
  // cut crossings grouped per strand, in (segment, flag, cut-index) order
  std::map<int, std::vector<std::tuple<int, char, int>>> by_strand;
  for (int idx = 0; idx < static_cast<int>(d.cut.size()); ++idx) {
    const auto& cc = d.cut[idx];
    by_strand[cc.strand].emplace_back(cc.seg, cc.flag, idx);
  }
  for (auto& [s, v] : by_strand) std::sort(v.begin(), v.end());
  for (int s = 1; s <= n0; ++s) {
    int lab = s;
    int V = d.n_visits(s);
    int prev = 0;
    std::vector<std::pair<std::pair<int, int>, int>> ranges;
    for (const auto& [j, fl, idx] : by_strand[s]) {
      ranges.push_back({{prev, j}, lab});
      lab = fl == 'R' ? ((lab - 1 - n0) % n + n) % n + 1
                      : ((lab - 1 + n0) % n) + 1;
      prev = j;  // a segment with a cut crossing carries two labels
    }
    ranges.push_back({{prev, V}, lab});
    out.per[s] = ranges;
    for (const auto& [r, l] : ranges) out.all.insert(l);
  }
  return out;
}

int omega_face(const Diagram& d, const FaceData& fd) {
  require(!d.cut.empty(), "no cut crossings");
  const auto& cc = d.cut[0];
  int end = cc.flag == 'R' ? 1 : 0;
  return fd.fmap.at(Dart::seg(cc.strand, cc.seg, end));
}

bool omega_left_of(const Diagram& d, int s) {
  for (const auto& cc : d.cut)
    if (cc.strand == s) return cc.flag == 'L';
  FaceData fd = face_data(d);
  int f0 = omega_face(d, fd);
  auto color = strand_two_coloring(d, fd, s);
  auto it = color.find(f0);
  return it != color.end() && it->second;
}

StrandPieces strand_pieces(const Diagram& d) {
  SegmentLabels per = segment_labels(d);
  StrandPieces out;
  std::set<std::pair<int, int>> segs_cut;
  for (const auto& cc : d.cut) {
    require(segs_cut.insert({cc.strand, cc.seg}).second,
            "cut crosses a segment twice");
    Side hi = cc.flag == 'R' ? Side::CW : Side::CCW;
    out.seg_half_side[{cc.strand, cc.seg}] = {opp(hi), hi};
  }
  for (int s = 1; s <= d.n_points; ++s) {
    int V = d.n_visits(s);
    for (const auto& [range, lab] : per.per[s]) {
      auto [lo, hi] = range;
      std::vector<std::pair<int, Part>> items;
      if (lo > 0) items.emplace_back(lo, Part::Hi);
      for (int j = lo + 1; j < hi; ++j) items.emplace_back(j, Part::Full);
      if (hi < V) items.emplace_back(hi, Part::Lo);
      int pid = static_cast<int>(out.pieces.size());
      out.pieces.push_back({s, lab, items});
      for (const auto& [j, part] : items)
        out.part_pid[{s, j, part}] = pid;
    }
  }
  return out;
}

CutOpen cut_open_structure(const Diagram& d, const FaceData& fd) {
  require(!d.cut.empty(), "no cut crossings");
  int n0 = d.n_points;
  auto lface = [&](int s, int j) { return fd.fmap.at(Dart::seg(s, j, 0)); };
  auto rface = [&](int s, int j) { return fd.fmap.at(Dart::seg(s, j, 1)); };

  CutOpen out;
  int F0 = omega_face(d, fd);
  out.cutfaces.push_back(F0);
  for (const auto& cc : d.cut) {
    int near = cc.flag == 'R' ? rface(cc.strand, cc.seg)
                              : lface(cc.strand, cc.seg);
    int far = cc.flag == 'R' ? lface(cc.strand, cc.seg)
                             : rface(cc.strand, cc.seg);
    require(near == out.cutfaces.back(), "cut path mismatch");
    out.cutfaces.push_back(far);
  }
  int Fm = out.cutfaces.back();
  out.split = std::set<int>(out.cutfaces.begin() + 1, out.cutfaces.end());
  require(static_cast<int>(out.split.size()) ==
              static_cast<int>(out.cutfaces.size()) - 1,
          "cut re-enters a face");
  require(!out.split.count(F0), "cut re-enters the centre face");
  // boundary exit: arc n0 (from point n0 to point 1) borders Fm
  std::optional<Dart> exit_dart;
  for (int e : {0, 1}) {
    auto it = fd.fmap.find(Dart::arc(n0, e));
    if (it != fd.fmap.end() && it->second == Fm) exit_dart = Dart::arc(n0, e);
  }
  require(exit_dart.has_value(), "cut does not exit between points n0 and 1");

  std::map<std::pair<int, int>, std::pair<Side, Side>> half;  // (lo, hi)
  for (const auto& cc : d.cut) {
    Side hi = cc.flag == 'R' ? Side::CW : Side::CCW;
    half[{cc.strand, cc.seg}] = {opp(hi), hi};
  }

  int m = static_cast<int>(out.cutfaces.size());
  for (int i = 1; i < m; ++i) {
    int F = out.cutfaces[i];
    const Face& border = fd.faces[F];
    int s_in = d.cut[i - 1].strand, j_in = d.cut[i - 1].seg;
    auto find_seg = [&](int s, int j) -> int {
      int found = -1;
      for (int k = 0; k < static_cast<int>(border.size()); ++k)
        if (border[k].is_seg() && border[k].s == s && border[k].j == j) {
          require(found < 0, "segment appears twice on a split face");
          found = k;
        }
      require(found >= 0, "cut segment not on face border");
      return found;
    };
    int ii = find_seg(s_in, j_in);
    Dart d_in = border[ii];
    Dart d_out;
    int io;
    if (i < m - 1) {
      io = find_seg(d.cut[i].strand, d.cut[i].seg);
      d_out = border[io];
    } else {
      d_out = *exit_dart;
      io = -1;
      for (int k = 0; k < static_cast<int>(border.size()); ++k)
        if (border[k] == d_out) io = k;
      require(io >= 0, "exit arc not on face border");
    }
    const auto& hin = half.at({s_in, j_in});
    Side SA = d_in.end == 0 ? hin.second : hin.first;  // hi : lo
    Side chk;
    if (d_out.is_seg()) {
      const auto& hout = half.at({d_out.s, d_out.j});
      chk = d_out.end == 0 ? hout.first : hout.second;  // lo : hi
    } else {
      chk = d_out.end == 0 ? Side::CCW : Side::CW;
    }
    require(chk == SA, "cut sides disagree across a split face");
    int sz = static_cast<int>(border.size());
    for (int k = (ii + 1) % sz; k != io; k = (k + 1) % sz)
      out.side_of[{F, border[k]}] = SA;
    for (int k = (io + 1) % sz; k != ii; k = (k + 1) % sz)
      out.side_of[{F, border[k]}] = opp(SA);
  }
  return out;
}

DirectLabels direct_labels(const Diagram& d) {
  FaceData fd = face_data(d);
  int n0 = d.n_points;
  int n = n0 * d.order;
  StrandPieces sp = strand_pieces(d);
  CutOpen co = cut_open_structure(d, fd);

  // node: (face, side) with side 0 = whole face, 1 = ccw half, 2 = cw half
  using Node = std::pair<int, int>;
  auto side_code = [](Side s) { return s == Side::CCW ? 1 : 2; };
  auto node_at = [&](int f, const Dart& dart, Part part) -> Node {
    if (!co.split.count(f)) return {f, 0};
    auto it = co.side_of.find({f, dart});
    if (it != co.side_of.end()) return {f, side_code(it->second)};
    require(part != Part::Full, "split dart needs a lo/hi part");
    const auto& hs = sp.seg_half_side.at({dart.s, dart.j});
    return {f, side_code(part == Part::Lo ? hs.first : hs.second)};
  };

  struct Edge {
    Node a, b;
    int pid;
    Node left;
  };
  std::vector<Edge> edges;
  std::set<Node> nodes;
  for (int s = 1; s <= n0; ++s) {
    int V = d.n_visits(s);
    for (int j = 1; j < V; ++j) {
      Dart d0 = Dart::seg(s, j, 0), d1 = Dart::seg(s, j, 1);
      int f0 = fd.fmap.at(d0), f1 = fd.fmap.at(d1);
      std::vector<Part> parts;
      if (sp.seg_half_side.count({s, j}))
        parts = {Part::Lo, Part::Hi};
      else
        parts = {Part::Full};
      for (Part part : parts) {
        Node nA = node_at(f0, d0, part);
        Node nB = node_at(f1, d1, part);
        int pid = sp.part_pid.at({s, j, part});
        edges.push_back({nA, nB, pid, nA});
        nodes.insert(nA);
        nodes.insert(nB);
      }
    }
  }

  std::map<Node, std::set<int>> labels;
  for (const Node& nd : nodes) labels[nd];
  std::map<Node, std::vector<std::pair<Node, bool>>> adj;
  for (const Edge& e : edges) {
    adj[e.a];
    adj[e.b];
  }
  for (int pid = 0; pid < static_cast<int>(sp.pieces.size()); ++pid) {
    std::map<Node, char> color;
    std::vector<Node> stack;
    for (const Edge& e : edges) {
      if (e.pid != pid) continue;
      Node right = e.left == e.a ? e.b : e.a;
      for (const auto& [nd, col] : {std::pair{e.left, 'L'},
                                    std::pair{right, 'R'}}) {
        auto it = color.find(nd);
        if (it != color.end()) {
          require(it->second == col, "piece seed clash");
        } else {
          color[nd] = col;
          stack.push_back(nd);
        }
      }
    }
    std::map<Node, std::vector<std::pair<Node, bool>>> padj;
    for (const Edge& e : edges) {
      padj[e.a].emplace_back(e.b, e.pid == pid);
      padj[e.b].emplace_back(e.a, e.pid == pid);
    }
    while (!stack.empty()) {
      Node nd = stack.back();
      stack.pop_back();
      for (const auto& [md, flip] : padj[nd]) {
        char want = flip ? (color[nd] == 'L' ? 'R' : 'L') : color[nd];
        auto it = color.find(md);
        if (it != color.end()) {
          require(it->second == want, "piece side clash");
        } else {
          color[md] = want;
          stack.push_back(md);
        }
      }
    }
    require(color.size() == nodes.size(), "unreached nodes in piece coloring");
    for (const Node& nd : nodes)
      if (color[nd] == 'L') labels[nd].insert(sp.pieces[pid].label);
  }

  // step 5: missing labels, added where Omega lies left of the strand
  DirectLabels out;
  SegmentLabels sl = segment_labels(d);
  for (int j = 1; j <= n; ++j)
    if (!sl.all.count(j)) out.missing.push_back(j);
  std::set<int> added;
  for (int j : out.missing) {
    int j0 = ((j - 1) % n0) + 1;
    if (omega_left_of(d, j0)) {
      out.added.push_back(j);
      added.insert(j);
    }
  }

  auto with_added = [&](const std::set<int>& s) {
    std::set<int> u = s;
    u.insert(added.begin(), added.end());
    return std::vector<int>(u.begin(), u.end());
  };
  for (int i = 0; i < static_cast<int>(fd.faces.size()); ++i) {
    if (fd.kinds[i] == FaceKind::Cyclic) continue;
    if (co.split.count(i)) {
      std::set<int> ccw = labels.count({i, 1}) ? labels[{i, 1}] : std::set<int>{};
      std::set<int> cw = labels.count({i, 2}) ? labels[{i, 2}] : std::set<int>{};
      out.halves[i] = {with_added(ccw), with_added(cw)};
      out.regions[i] = with_added(ccw);
    } else {
      std::set<int> v = labels.count({i, 0}) ? labels[{i, 0}] : std::set<int>{};
      out.regions[i] = with_added(v);
    }
  }
  return out;
}



std::map<int, std::set<std::vector<int>>> cover_label_classes(
    const Diagram& d) {
  int n0 = d.n_points;
  Diagram C = sym_d(d);
  auto labP = postnikov_labels(C);
  FaceData fdC = face_data(C);
  FaceData fdO = face_data(d);
  std::map<int, std::set<std::vector<int>>> out;
  for (int fid = 0; fid < static_cast<int>(fdC.faces.size()); ++fid) {
    auto lit = labP.find(fid);
    if (lit == labP.end()) continue;
    std::set<int> projs;
    for (const Dart& dt : fdC.faces[fid]) {
      Dart q = dt.is_seg() ? Dart::seg(md(dt.s, n0), dt.j, dt.end)
                           : Dart::arc(md(dt.s, n0), dt.end);
      projs.insert(fdO.fmap.at(q));
    }
    if (projs.size() != 1)
      throw std::runtime_error("cover face projects onto several faces");
    out[*projs.begin()].insert(lit->second);
  }
  return out;
}

bool cross_validate_labels(const Diagram& d) {
  int n0 = d.n_points, n = n0 * d.order;
  DirectLabels dl = direct_labels(d);
  auto cc = cover_label_classes(d);
  for (const auto& [f, cls] : cc) {
    for (const auto& m : cls)
      if (!cls.count(rotate_set(m, n0, n))) return false;
    auto rit = dl.regions.find(f);
    if (rit != dl.regions.end() && !cls.count(rit->second)) return false;
  }
  for (const auto& [f, hv] : dl.halves) {
    const auto& [ccw, cw] = hv;
    if (rotate_set(ccw, n0, n) != cw && rotate_set(cw, n0, n) != ccw)
      return false;
  }
  return true;
}

}  // namespace orbidim
