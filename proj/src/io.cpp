#include "orbidim/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace orbidim {

std::string coeff_str(const Coeff& cf) {
  std::vector<std::string> parts;
  for (const auto& [e, q] : cf) {
    if (q == 0) continue;
    if (e == 0) {
      parts.push_back(q.get_str());
    } else {
      std::string z = e == 1 ? "z" : "z^" + std::to_string(e);
      if (q == 1)
        parts.push_back(z);
      else if (q == -1)
        parts.push_back("-" + z);
      else
        parts.push_back(q.get_str() + "*" + z);
    }
  }
  if (parts.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "+";
    s += parts[i];
  }
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+' && i + 1 < s.size() && s[i + 1] == '-') continue;
    out += s[i];
  }
  return out;
}

namespace {

struct Pt {
  double x = 0, y = 0;
};

struct Layout {
  int n = 0;
  std::map<int, Pt> point_pos;          // boundary point -> position
  std::map<int, Pt> crossing_pos;       // crossing id -> position
  std::vector<std::vector<Pt>> strands; // polyline per strand (1-based inside)
  double R = 100;
};

Pt on_circle(double R, double ang) { return {R * std::cos(ang), R * std::sin(ang)}; }

// Crossings sit on concentric rings indexed by their distance to the
// boundary along the strands; angular position from the average of the
// chord points of their visits.
Layout layout_diagram(const Diagram& d) {
  Layout L;
  L.n = d.n_points;
  const double pi = 3.14159265358979323846;
  auto angle = [&](int p) { return -pi / 2 + 2 * pi * (p - 1) / L.n; };
  for (int p = 1; p <= L.n; ++p) L.point_pos[p] = on_circle(L.R, angle(p));

  std::map<int, Pt> acc;
  std::map<int, int> cnt, depth;
  for (int s = 1; s <= L.n; ++s) {
    int V = d.n_visits(s);
    double a0 = angle(s), a1 = angle(d.tau[s - 1]);
    Pt S = on_circle(L.R, a0), E = on_circle(L.R, a1);
    bool same = d.tau[s - 1] == s;
    for (int v = 1; v <= V; ++v) {
      double t = static_cast<double>(v) / (V + 1);
      Pt P;
      if (same) {
        // closed strand: park the visits on an inner arc near its point
        P = on_circle(L.R * 0.55, a0 + 2 * pi * t);
      } else {
        P = {(1 - t) * S.x + t * E.x, (1 - t) * S.y + t * E.y};
      }
      int cid = d.visits(s)[v - 1];
      acc[cid].x += P.x;
      acc[cid].y += P.y;
      cnt[cid] += 1;
      int dd = std::min(v, V + 1 - v);
      auto it = depth.find(cid);
      depth[cid] = it == depth.end() ? dd : std::min(it->second, dd);
    }
  }
  for (const auto& [cid, c] : d.crossings)
    if (c.at != 0) depth[cid] = 0;
  for (const auto& [cid, p] : acc) {
    double ang = std::atan2(p.y / cnt.at(cid), p.x / cnt.at(cid));
    const Crossing& c = d.crossing(cid);
    if (c.at != 0) ang = angle(c.at);
    double r = std::max(0.18, 0.88 - 0.16 * depth.at(cid)) * L.R;
    if (c.at != 0) r = 0.96 * L.R;
    L.crossing_pos[cid] = {r * std::cos(ang), r * std::sin(ang)};
  }
  for (int s = 1; s <= L.n; ++s) {
    std::vector<Pt> poly;
    poly.push_back(L.point_pos.at(s));
    for (int cid : d.visits(s)) poly.push_back(L.crossing_pos.at(cid));
    poly.push_back(L.point_pos.at(d.tau[s - 1]));
    L.strands.push_back(std::move(poly));
  }
  return L;
}

std::string num(double v) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << v;
  return o.str();
}

}  // namespace

std::string render_svg(const Diagram& d) {
  Layout L = layout_diagram(d);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       "width=\"240\" height=\"240\" viewBox=\"-120 -120 240 240\">\n";
  o << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(L.R)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (size_t i = 0; i < L.strands.size(); ++i) {
    o << "  <polyline fill=\"none\" stroke=\"#3366aa\" points=\"";
    for (size_t k = 0; k < L.strands[i].size(); ++k) {
      if (k) o << " ";
      o << num(L.strands[i][k].x) << "," << num(L.strands[i][k].y);
    }
    o << "\"/>\n";
  }
  for (const auto& [p, pt] : L.point_pos) {
    o << "  <circle cx=\"" << num(pt.x) << "\" cy=\"" << num(pt.y)
      << "\" r=\"2.5\" fill=\"black\"/>\n";
    o << "  <text x=\"" << num(pt.x * 1.12) << "\" y=\"" << num(pt.y * 1.12)
      << "\" font-size=\"8\" text-anchor=\"middle\">" << p << "</text>\n";
  }
  for (const auto& [cid, pt] : L.crossing_pos) {
    o << "  <circle cx=\"" << num(pt.x) << "\" cy=\"" << num(pt.y)
      << "\" r=\"2\" fill=\"#aa3333\"/>\n";
    o << "  <text x=\"" << num(pt.x) << "\" y=\"" << num(pt.y - 4)
      << "\" font-size=\"6\" text-anchor=\"middle\">c" << cid << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string render_tikz(const Diagram& d) {
  Layout L = layout_diagram(d);
  auto sc = [](double v) { return num(v / 25.0); };
  std::ostringstream o;
  o << "\\begin{tikzpicture}\n";
  o << "  \\draw (0,0) circle (" << sc(L.R) << ");\n";
  for (const auto& poly : L.strands) {
    o << "  \\draw[blue]";
    for (size_t k = 0; k < poly.size(); ++k) {
      if (k) o << " --";
      o << " (" << sc(poly[k].x) << "," << sc(-poly[k].y) << ")";
    }
    o << ";\n";
  }
  for (const auto& [p, pt] : L.point_pos)
    o << "  \\fill (" << sc(pt.x) << "," << sc(-pt.y) << ") circle (0.05) "
      << "node[shift={(" << sc(pt.x * 0.14) << "," << sc(-pt.y * 0.14)
      << ")}] {\\tiny " << p << "};\n";
  for (const auto& [cid, pt] : L.crossing_pos)
    o << "  \\fill[red] (" << sc(pt.x) << "," << sc(-pt.y)
      << ") circle (0.04) node[above] {\\tiny $c_{" << cid << "}$};\n";
  o << "\\end{tikzpicture}\n";
  return o.str();
}

}  // namespace orbidim
