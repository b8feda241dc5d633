#pragma once
// Exact arithmetic in Q(zeta_d): elements are coefficient vectors of
// polynomials in z modulo the d-th cyclotomic polynomial Phi_d.

#include <gmpxx.h>

#include <cassert>
#include <map>
#include <vector>

namespace orbidim {

using Rat = mpq_class;

class Field {
 public:
  using El = std::vector<Rat>;  // length deg(Phi_d)

  explicit Field(int d) : d_(d < 1 ? 1 : d) {
    phi_ = cyclotomic(d_);
    deg_ = static_cast<int>(phi_.size()) - 1;
  }

  int d() const { return d_; }
  int deg() const { return deg_; }

  El zero() const { return El(deg_, Rat(0)); }
  El one() const { return el({{0, Rat(1)}}); }

  // From {zeta_exponent: rational}.
  El el(const std::map<int, Rat>& expdict) const {
    El v(deg_, Rat(0));
    for (const auto& [e, q] : expdict) {
      El z = zpow(((e % d_) + d_) % d_);
      for (int i = 0; i < deg_; ++i) v[i] += q * z[i];
    }
    return v;
  }

  El zpow(int e) const {
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = 1;
    return reduce(v);
  }

  El add(const El& a, const El& b) const {
    El r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }

  El neg(const El& a) const {
    El r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
  }

  El mul(const El& a, const El& b) const {
    std::vector<Rat> v(2 * deg_ - 1, Rat(0));
    for (int i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < deg_; ++j)
        if (b[j] != 0) v[i + j] += a[i] * b[j];
    }
    return reduce(v);
  }

  // Inverse via extended Euclid against Phi_d in Q[z].
  El inv(const El& a) const;

  // Phi_d, lowest degree first, monic.
  static std::vector<Rat> cyclotomic(int d);

 private:
  El reduce(std::vector<Rat> v) const {
    if (static_cast<int>(v.size()) < deg_) v.resize(deg_, Rat(0));
    for (int i = static_cast<int>(v.size()) - 1; i >= deg_; --i) {
      Rat c = v[i];
      if (c != 0) {
        v[i] = 0;
        for (int j = 0; j <= deg_; ++j) v[i - deg_ + j] -= c * phi_[j];
      }
    }
    v.resize(deg_);
    return v;
  }

  int d_;
  int deg_;
  std::vector<Rat> phi_;
};

inline bool fel_zero(const Field::El& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace orbidim
