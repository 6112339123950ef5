#pragma once

#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/scalar.hpp"

namespace dq {

inline constexpr int kDefaultTruncation = 3;

/// Polynomial in the formal parameter hbar, reduced modulo hbar^(order+1).
class HbarPoly {
 public:
  HbarPoly() : HbarPoly(kDefaultTruncation) {}
  explicit HbarPoly(int truncation_order) : coeffs_(check_order(truncation_order) + 1) {}
  HbarPoly(Scalar constant, int truncation_order) : HbarPoly(truncation_order) {
    coeffs_[0] = std::move(constant);
  }

  /// c * hbar^power, dropped entirely if power exceeds the truncation.
  static HbarPoly monomial(Scalar c, int power, int truncation_order) {
    if (power < 0) throw InputError("negative hbar power in HbarPoly");
    HbarPoly p(truncation_order);
    if (power <= truncation_order) p.coeffs_[power] = std::move(c);
    return p;
  }

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int k) const { return coeffs_.at(k); }
  Scalar& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  HbarPoly operator-() const {
    HbarPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  HbarPoly& operator+=(const HbarPoly& o) {
    require_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  HbarPoly& operator-=(const HbarPoly& o) {
    require_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  HbarPoly& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator*(HbarPoly a, const Scalar& s) { return a *= s; }
  friend HbarPoly operator*(const Scalar& s, HbarPoly a) { return a *= s; }

  friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
    a.require_same(b);
    HbarPoly r(a.truncation());
    const int n = a.truncation();
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  HbarPoly& operator*=(const HbarPoly& o) { return *this = *this * o; }

  /// Multiply by hbar^k, k >= 0.
  HbarPoly shifted(int k) const {
    HbarPoly r(truncation());
    for (int i = 0; i + k <= truncation(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
  }

  friend bool operator==(const HbarPoly& a, const HbarPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_order(int n) {
    if (n < 0) throw InputError("negative hbar truncation order");
    return n;
  }
  void require_same(const HbarPoly& o) const {
    if (o.truncation() != truncation())
      throw InputError("hbar truncation mismatch: " + std::to_string(truncation()) + " vs " +
                       std::to_string(o.truncation()));
  }

  std::vector<Scalar> coeffs_;
};

inline std::string to_string(const HbarPoly& p) {
  std::string out;
  for (int k = 0; k <= p.truncation(); ++k) {
    if (p[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k > 0) out += "*hbar^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace dq
