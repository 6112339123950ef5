#pragma once

#include <map>
#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/scalar.hpp"

namespace dq {

using Exponents = std::vector<int>;

/// Polynomial in commuting variables x1..xd with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {
    if (dim < 0) throw InputError("negative polynomial dimension");
  }
  Polynomial(int dim, const Scalar& constant) : Polynomial(dim) {
    add_term(Exponents(dim, 0), constant);
  }

  /// The coordinate function x_i (0-based).
  static Polynomial variable(int dim, int i) {
    Polynomial p(dim);
    p.check_index(i);
    Exponents e(dim, 0);
    e[i] = 1;
    p.add_term(e, Scalar(1));
    return p;
  }

  int dim() const { return dim_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Scalar constant_term() const {
    auto it = terms_.find(Exponents(dim_, 0));
    return it == terms_.end() ? Scalar() : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  int degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim_) throw InputError("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    require_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_dim(b);
    Polynomial r(a.dim_);
    Exponents e(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int k = 0; k < a.dim_; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int i) const {
    check_index(i);
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      r.add_term(f, c * Scalar(e[i]));
    }
    return r;
  }

  /// Mixed partial derivative, counts[i] times in x_i.
  Polynomial derivative(const Exponents& counts) const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      Scalar factor = c;
      bool zero = false;
      for (int k = 0; k < dim_ && !zero; ++k) {
        for (int m = 0; m < counts[k]; ++m) {
          if (f[k] == 0) {
            zero = true;
            break;
          }
          factor *= Scalar(f[k]--);
        }
      }
      if (!zero) r.add_term(f, factor);
    }
    return r;
  }

  Scalar evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != dim_) throw InputError("basepoint has wrong dimension");
    Scalar sum;
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (int k = 0; k < dim_; ++k)
        if (e[k]) t *= point[k].pow(e[k]);
      sum += t;
    }
    return sum;
  }

  /// Substitutes x_k -> values[k] (polynomials of a common dimension).
  Polynomial compose(const std::vector<Polynomial>& values) const {
    if (static_cast<int>(values.size()) != dim_) throw InputError("substitution has wrong length");
    int out_dim = values.empty() ? 0 : values[0].dim();
    Polynomial r(out_dim);
    for (const auto& [e, c] : terms_) {
      Polynomial t(out_dim, c);
      for (int k = 0; k < dim_; ++k)
        for (int m = 0; m < e[k]; ++m) t *= values[k];
      r += t;
    }
    return r;
  }

  /// p(x + shift).
  Polynomial shifted(const std::vector<Scalar>& shift) const {
    if (static_cast<int>(shift.size()) != dim_) throw InputError("basepoint has wrong dimension");
    std::vector<Polynomial> values;
    for (int k = 0; k < dim_; ++k) values.push_back(variable(dim_, k) + Polynomial(dim_, shift[k]));
    return compose(values);
  }

  static int total_degree(const Exponents& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  }

  void check_index(int i) const {
    if (i < 0 || i >= dim_)
      throw InputError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                       std::to_string(dim_));
  }

 private:
  void require_dim(const Polynomial& o) const {
    if (o.dim_ != dim_)
      throw InputError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                       std::to_string(o.dim_));
  }

  int dim_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace dq
