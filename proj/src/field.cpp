#include "orbidim/field.hpp"

#include <stdexcept>

namespace orbidim {

namespace {

int poly_deg(const std::vector<Rat>& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

// Exact division of polynomials (remainder must vanish).
std::vector<Rat> polydiv(std::vector<Rat> a, const std::vector<Rat>& b) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<Rat> out(na - nb + 1, Rat(0));
  for (int i = na - nb; i >= 0; --i) {
    Rat q = a[i + nb - 1] / b[nb - 1];
    out[i] = q;
    for (int j = 0; j < nb; ++j) a[i + j] -= q * b[j];
  }
  for (const auto& c : a)
    if (c != 0) throw std::logic_error("cyclotomic division not exact");
  return out;
}

}  // namespace

std::vector<Rat> Field::cyclotomic(int d) {
  // x^d - 1 = prod_{e | d} Phi_e
  std::map<int, std::vector<Rat>> phis;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::vector<Rat> p(e + 1, Rat(0));
    p[0] = -1;
    p[e] = 1;
    for (int f = 1; f < e; ++f)
      if (e % f == 0) p = polydiv(p, phis[f]);
    phis[e] = p;
  }
  return phis[d];
}

Field::El Field::inv(const El& a) const {
  if (fel_zero(a)) throw std::domain_error("division by zero in Q(zeta)");
  // extended Euclid: r0 = phi, r1 = a; track s with s*a = r (mod phi)
  std::vector<Rat> r0 = phi_, r1(a.begin(), a.end());
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
  while (poly_deg(r1) > 0) {
    int d1 = poly_deg(r1);
    std::vector<Rat> nr = r0;
    std::vector<Rat> ns = s0;
    while (true) {
      int dd = poly_deg(nr);
      if (dd < d1) break;
      Rat q = nr[dd] / r1[d1];
      for (int j = 0; j <= d1; ++j) nr[dd - d1 + j] -= q * r1[j];
      if (static_cast<int>(ns.size()) < dd - d1 + static_cast<int>(s1.size()))
        ns.resize(dd - d1 + s1.size(), Rat(0));
      for (size_t j = 0; j < s1.size(); ++j) ns[dd - d1 + j] -= q * s1[j];
    }
    r0 = r1;
    r1 = nr;
    s0 = s1;
    s1 = ns;
  }
  if (poly_deg(r1) != 0) throw std::domain_error("element not invertible");
  Rat c = r1[0];
  std::vector<Rat> inv_poly(s1.size());
  for (size_t i = 0; i < s1.size(); ++i) inv_poly[i] = s1[i] / c;
  return reduce(std::move(inv_poly));
}

}  // namespace orbidim
