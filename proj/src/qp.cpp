#include "orbidim/qp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orbidim/labels.hpp"

namespace orbidim {

std::string py_str(const Path<QArrow>& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << "(" << p[i].first << ", " << p[i].second << ")";
  }
  if (p.size() == 1) os << ",";
  os << ")";
  return os.str();
}

QP build_qp(const Diagram& diag, int zeta_exp) {
  QP qp;
  qp.fd = face_data(diag);
  const FaceData& fd = qp.fd;
  auto arrows0 = quiver_arrows(diag, fd);
  auto cycles = fundamental_cycles(diag, fd, arrows0);
  int d = diag.kind == "orbifold" ? diag.order : 1;
  qp.order = d;

  if (diag.kind == "orbifold") {
    qp.central = omega_face(diag, fd);
    qp.central_kind = face_kind_name(fd.kinds[qp.central]);
  }
  bool split_central = qp.central_kind == "alternating";

  for (int i = 0; i < static_cast<int>(fd.faces.size()); ++i) {
    if (fd.kinds[i] == FaceKind::Cyclic) continue;
    if (split_central && i == qp.central)
      for (int c = 1; c <= d; ++c) qp.vertices.push_back({i, c});
    else
      qp.vertices.push_back({i, 0});
  }
  for (const QVertex& v : qp.vertices)
    if (fd.kinds[v.first] == FaceKind::Boundary) qp.frozen.insert(v);

  for (const auto& [cid, st] : arrows0) {
    auto [s, t] = st;
    if (split_central && (s == qp.central || t == qp.central)) {
      if (s == qp.central && t == qp.central)
        throw std::runtime_error("central loop arrow");
      for (int c = 1; c <= d; ++c) {
        QVertex sv{s, s == qp.central ? c : 0};
        QVertex tv{t, t == qp.central ? c : 0};
        qp.arrows[{cid, c}] = {sv, tv};
      }
    } else {
      qp.arrows[{cid, 0}] = {{s, 0}, {t, 0}};
    }
  }

  if (!split_central) {
    for (const auto& cy : cycles) {
      Path<QArrow> arrlist;
      for (int cid : cy.cids) arrlist.push_back({cid, 0});
      if (qp.central >= 0 && cy.face == qp.central) {
        Path<QArrow> rep;
        for (int r = 0; r < d; ++r)
          rep.insert(rep.end(), arrlist.begin(), arrlist.end());
        qp.terms.push_back({Coeff{{0, Rat(cy.sign, d)}}, rep});
      } else {
        qp.terms.push_back({Coeff{{0, Rat(cy.sign)}}, arrlist});
      }
    }
  } else {
    // order the adjacent cycles by walking the central border starting at
    // the dart crossed by the innermost cut crossing; the last cycle in the
    // walk is the zeta-weighted one
    const Face& border = fd.faces[qp.central];
    int s0 = diag.cut[0].strand, j0 = diag.cut[0].seg;
    int k0 = -1;
    for (int k = 0; k < static_cast<int>(border.size()); ++k)
      if (border[k].is_seg() && border[k].s == s0 && border[k].j == j0) {
        if (k0 >= 0) throw std::runtime_error("ambiguous central start dart");
        k0 = k;
      }
    if (k0 < 0) throw std::runtime_error("cut dart not on central border");
    std::vector<int> adj_order;
    for (int t = 0; t < static_cast<int>(border.size()); ++t) {
      const Dart& dd = border[(k0 + t) % border.size()];
      if (!dd.is_seg()) throw std::runtime_error("arc on central border");
      int other = fd.fmap.at(opposite(dd));
      if (fd.kinds[other] != FaceKind::Cyclic)
        throw std::runtime_error("central neighbour not cyclic");
      adj_order.push_back(other);
    }
    if (std::set<int>(adj_order.begin(), adj_order.end()).size() !=
        adj_order.size())
      throw std::runtime_error("repeated central neighbour");
    int r = static_cast<int>(adj_order.size());
    std::map<int, int> jindex;
    for (int j = 0; j < r; ++j) jindex[adj_order[j]] = j + 1;

    for (const auto& cy : cycles) {
      bool incident = false;
      for (int cid : cy.cids) {
        auto [s, t] = arrows0.at(cid);
        if (s == qp.central || t == qp.central) incident = true;
      }
      if (!incident) {
        Path<QArrow> arrlist;
        for (int cid : cy.cids) arrlist.push_back({cid, 0});
        qp.terms.push_back({Coeff{{0, Rat(cy.sign)}}, arrlist});
        continue;
      }
      int j = jindex.at(cy.face);
      for (int c = 1; c <= d; ++c) {
        Path<QArrow> arrlist;
        for (int cid : cy.cids) {
          auto [s, t] = arrows0.at(cid);
          bool inc = s == qp.central || t == qp.central;
          arrlist.push_back({cid, inc ? c : 0});
        }
        Coeff coeff;
        if (j == r)
          coeff[((zeta_exp * c) % d + d) % d] = Rat(cy.sign);
        else
          coeff[0] = Rat(cy.sign);
        qp.terms.push_back({coeff, arrlist});
      }
    }
  }
  return qp;
}

std::set<QArrow, QArrowStrLess> internal_arrows(const QP& qp) {
  std::map<QArrow, int> count;
  for (const auto& [cf, cyc] : qp.terms) {
    std::set<QArrow> seen(cyc.begin(), cyc.end());
    for (const QArrow& a : seen) ++count[a];
  }
  std::set<QArrow, QArrowStrLess> out;
  for (const auto& [a, c] : count)
    if (c >= 2) out.insert(a);
  return out;
}

std::map<QArrow, Relation<QArrow>, QArrowStrLess> relations(const QP& qp) {
  std::map<QArrow, Relation<QArrow>, QArrowStrLess> rels;
  for (const QArrow& a : internal_arrows(qp)) {
    std::map<Path<QArrow>, Coeff> merged;
    for (const auto& [coeff, cyc] : qp.terms) {
      for (int t = 0; t < static_cast<int>(cyc.size()); ++t) {
        if (cyc[t] != a) continue;
        Path<QArrow> path(cyc.begin() + t + 1, cyc.end());
        path.insert(path.end(), cyc.begin(), cyc.begin() + t);
        Coeff& acc = merged[path];
        for (const auto& [e, q] : coeff) acc[e] += q;
      }
    }
    std::vector<std::pair<std::string, const Path<QArrow>*>> order;
    for (const auto& [path, cf] : merged) order.emplace_back(py_str(path), &path);
    std::sort(order.begin(), order.end());
    Relation<QArrow> out;
    for (const auto& [key, pp] : order) {
      Coeff cf;
      for (const auto& [e, q] : merged.at(*pp))
        if (q != 0) cf[e] = q;
      if (!cf.empty()) out.push_back({cf, *pp});
    }
    rels[a] = std::move(out);
  }
  return rels;
}

}  // namespace orbidim
