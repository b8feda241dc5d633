#include "orbidim/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbidim {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
}

int crossing_id(const std::string& tok, int line) {
  if (tok.size() < 2 || tok[0] != 'c')
    throw ParseError(line, "expected crossing id 'c<N>', got '" + tok + "'");
  return to_int(tok.substr(1), line);
}

}  // namespace

Diagram parse_osd(const std::string& text) {
  Diagram d;
  d.kind.clear();
  d.n_points = -1;
  bool saw_header = false, saw_tau = false, saw_cut = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "osd") {
      if (toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, "unsupported format version");
      saw_header = true;
    } else if (head == "kind") {
      if (toks.size() != 2 || (toks[1] != "postnikov" && toks[1] != "orbifold"))
        throw ParseError(lineno, "kind must be 'postnikov' or 'orbifold'");
      d.kind = toks[1];
    } else if (head == "points") {
      if (toks.size() != 2) throw ParseError(lineno, "points takes one value");
      d.n_points = to_int(toks[1], lineno);
    } else if (head == "order") {
      if (toks.size() != 2) throw ParseError(lineno, "order takes one value");
      d.order = to_int(toks[1], lineno);
    } else if (head == "tau") {
      d.tau.clear();
      for (size_t i = 1; i < toks.size(); ++i)
        d.tau.push_back(to_int(toks[i], lineno));
      saw_tau = true;
    } else if (head == "strand") {
      if (toks.size() < 2 || toks[1].back() != ':')
        throw ParseError(lineno, "expected 'strand <i>:'");
      int idx = to_int(toks[1].substr(0, toks[1].size() - 1), lineno);
      if (idx != static_cast<int>(d.strands.size()) + 1)
        throw ParseError(lineno, "strands must appear in order 1,2,...");
      std::vector<int> vis;
      for (size_t i = 2; i < toks.size(); ++i)
        vis.push_back(crossing_id(toks[i], lineno));
      d.strands.push_back(std::move(vis));
    } else if (head == "crossing") {
      if (toks.size() < 2 || toks[1].back() != ':')
        throw ParseError(lineno, "expected 'crossing c<N>:'");
      int cid = crossing_id(toks[1].substr(0, toks[1].size() - 1), lineno);
      if (d.crossings.count(cid))
        throw ParseError(lineno, "duplicate crossing id c" + std::to_string(cid));
      Crossing c;
      bool got_a = false, got_b = false, got_chir = false;
      for (size_t i = 2; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "expected key=value, got '" + toks[i] + "'");
        std::string k = toks[i].substr(0, eq), v = toks[i].substr(eq + 1);
        if (k == "a" || k == "b") {
          if (v.size() < 5 || v.front() != '(' || v.back() != ')')
            throw ParseError(lineno, "expected (strand,pos) for '" + k + "'");
          auto comma = v.find(',');
          if (comma == std::string::npos)
            throw ParseError(lineno, "expected (strand,pos) for '" + k + "'");
          Visit vis{to_int(v.substr(1, comma - 1), lineno),
                    to_int(v.substr(comma + 1, v.size() - comma - 2), lineno)};
          if (k == "a") { c.a = vis; got_a = true; }
          else { c.b = vis; got_b = true; }
        } else if (k == "chir") {
          if (v != "L" && v != "R")
            throw ParseError(lineno, "chir must be L or R");
          c.chir = v[0];
          got_chir = true;
        } else if (k == "at") {
          c.at = to_int(v, lineno);
        } else {
          throw ParseError(lineno, "unknown crossing field '" + k + "'");
        }
      }
      if (!got_a || !got_b || !got_chir)
        throw ParseError(lineno, "crossing needs a=, b=, chir=");
      d.crossings.emplace(cid, c);
    } else if (head == "cut:" || head == "cut") {
      size_t start = 1;
      if (head == "cut") {
        if (toks.size() < 2 || toks[1] != ":")
          throw ParseError(lineno, "expected 'cut:'");
        start = 2;
      }
      for (size_t i = start; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.size() < 7 || t.front() != '(' || t.back() != ')')
          throw ParseError(lineno, "expected (strand,seg,flag)");
        auto c1 = t.find(','), c2 = t.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
          throw ParseError(lineno, "expected (strand,seg,flag)");
        std::string fl = t.substr(c2 + 1, t.size() - c2 - 2);
        if (fl != "L" && fl != "R")
          throw ParseError(lineno, "cut flag must be L or R");
        d.cut.push_back({to_int(t.substr(1, c1 - 1), lineno),
                         to_int(t.substr(c1 + 1, c2 - c1 - 1), lineno), fl[0]});
      }
      saw_cut = true;
    } else {
      throw ParseError(lineno, "unrecognized line '" + line + "'");
    }
  }

  if (!saw_header) throw ParseError(1, "missing 'osd 1' header");
  if (d.kind.empty()) throw ParseError(lineno, "missing 'kind'");
  if (d.n_points < 0) throw ParseError(lineno, "missing 'points'");
  if (!saw_tau) throw ParseError(lineno, "missing 'tau'");
  if (d.kind == "orbifold" && !saw_cut)
    throw ParseError(lineno, "orbifold diagram requires a 'cut:' line");
  if (d.kind == "postnikov") d.order = 1;
  check_structure(d);
  return d;
}

std::string serialize_osd(const Diagram& d) {
  std::ostringstream out;
  out << "osd 1\n";
  out << "kind " << d.kind << "\n";
  out << "points " << d.n_points << "\n";
  if (d.kind == "orbifold") out << "order " << d.order << "\n";
  out << "tau";
  for (int t : d.tau) out << " " << t;
  out << "\n";
  for (size_t i = 0; i < d.strands.size(); ++i) {
    out << "strand " << (i + 1) << ":";
    for (int c : d.strands[i]) out << " c" << c;
    out << "\n";
  }
  for (const auto& [cid, c] : d.crossings) {
    out << "crossing c" << cid << ": a=(" << c.a.strand << "," << c.a.pos
        << ") b=(" << c.b.strand << "," << c.b.pos << ") chir=" << c.chir;
    if (c.at != 0) out << " at=" << c.at;
    out << "\n";
  }
  if (d.kind == "orbifold") {
    out << "cut:";
    for (const auto& cc : d.cut)
      out << " (" << cc.strand << "," << cc.seg << "," << cc.flag << ")";
    out << "\n";
  }
  return out.str();
}

void check_structure(const Diagram& d) {
  auto fail = [](const std::string& msg) {
    throw std::runtime_error("bad diagram: " + msg);
  };
  int n = d.n_points;
  if (n <= 0) fail("points must be positive");
  if (static_cast<int>(d.tau.size()) != n) fail("tau length != points");
  if (static_cast<int>(d.strands.size()) != n) fail("need one strand per point");
  std::set<int> tau_img(d.tau.begin(), d.tau.end());
  if (static_cast<int>(tau_img.size()) != n || *tau_img.begin() != 1 ||
      *tau_img.rbegin() != n)
    fail("tau is not a permutation of 1..n");
  if (d.kind == "orbifold") {
    if (d.order < 2) fail("orbifold order must be >= 2");
  }
  // Every visit in every strand resolves to a crossing naming it back.
  std::map<int, int> uses;
  for (int s = 1; s <= n; ++s) {
    const auto& vis = d.visits(s);
    for (int j = 1; j <= static_cast<int>(vis.size()); ++j) {
      int cid = vis[j - 1];
      auto it = d.crossings.find(cid);
      if (it == d.crossings.end())
        fail("strand " + std::to_string(s) + " references missing crossing c" +
             std::to_string(cid));
      const Crossing& c = it->second;
      Visit here{s, j};
      if (c.a != here && c.b != here)
        fail("crossing c" + std::to_string(cid) + " does not record visit (" +
             std::to_string(s) + "," + std::to_string(j) + ")");
      ++uses[cid];
    }
  }
  for (const auto& [cid, c] : d.crossings) {
    int expect = (c.a == c.b) ? 1 : 2;
    if (uses[cid] != expect)
      fail("crossing c" + std::to_string(cid) + " visited " +
           std::to_string(uses[cid]) + " times, expected " +
           std::to_string(expect));
    for (const Visit* v : {&c.a, &c.b}) {
      if (v->strand < 1 || v->strand > n) fail("visit strand out of range");
      if (v->pos < 1 || v->pos > d.n_visits(v->strand))
        fail("visit position out of range on strand " +
             std::to_string(v->strand));
      if (d.visits(v->strand)[v->pos - 1] != cid)
        fail("visit list mismatch at crossing c" + std::to_string(cid));
    }
    if (c.at != 0 && (c.at < 1 || c.at > n)) fail("at= point out of range");
  }
  for (const auto& cc : d.cut) {
    if (cc.strand < 1 || cc.strand > n) fail("cut strand out of range");
    if (cc.seg < 1 || cc.seg >= d.n_visits(cc.strand) + 1)
      fail("cut segment out of range");
  }
}

}  // namespace orbidim
