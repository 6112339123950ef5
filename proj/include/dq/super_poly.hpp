#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/hbar_poly.hpp"
#include "dq/polynomial.hpp"

namespace dq {

enum class Parity { even = 0, odd = 1 };

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

struct Variable {
  std::string name;
  Parity parity;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered set of named generators. Even generators and odd generators are
/// numbered separately; odd ones are stored as bits of a 64-bit mask.
class Layout {
 public:
  explicit Layout(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
      slot_.push_back(v.parity == Parity::even ? n_even_++ : n_odd_++);
    }
    if (n_odd_ > 64) throw InputError("at most 64 odd generators are supported");
  }

  /// xi1..xid (even) followed by eta1..etad (odd).
  static std::shared_ptr<const Layout> phase_space(int d) {
    if (d <= 0) throw InputError("dimension must be positive");
    std::vector<Variable> vars;
    for (int i = 1; i <= d; ++i) vars.push_back({"xi" + std::to_string(i), Parity::even});
    for (int i = 1; i <= d; ++i) vars.push_back({"eta" + std::to_string(i), Parity::odd});
    return std::make_shared<const Layout>(std::move(vars));
  }

  int size() const { return static_cast<int>(vars_.size()); }
  int n_even() const { return n_even_; }
  int n_odd() const { return n_odd_; }
  const Variable& var(int id) const { return vars_.at(id); }
  const std::vector<Variable>& vars() const { return vars_; }
  Parity parity(int id) const { return vars_.at(id).parity; }
  /// Position among generators of the same parity.
  int slot(int id) const { return slot_.at(id); }

  int find(const std::string& name) const {
    for (int k = 0; k < size(); ++k)
      if (vars_[k].name == name) return k;
    return -1;
  }

  friend bool operator==(const Layout& a, const Layout& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::vector<int> slot_;
  int n_even_ = 0;
  int n_odd_ = 0;
};

using LayoutPtr = std::shared_ptr<const Layout>;

/// Canonical monomial: even exponents and the ascending set of odd factors.
struct MonomialKey {
  Exponents even;
  std::uint64_t odd = 0;

  int odd_degree() const { return std::popcount(odd); }
  Parity parity() const { return odd_degree() % 2 ? Parity::odd : Parity::even; }

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

/// Sign of the permutation bringing eta_A * eta_B into ascending order;
/// zero when the two sets overlap.
inline int odd_product_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    int q = std::countr_zero(rest);
    inversions += std::popcount(a >> (q + 1));
  }
  return inversions % 2 ? -1 : 1;
}

/// Graded-commutative polynomial over hbar-truncated Gaussian rationals.
class SuperPoly {
 public:
  SuperPoly(LayoutPtr layout, int truncation = kDefaultTruncation)
      : layout_(std::move(layout)), trunc_(truncation) {
    if (!layout_) throw InputError("null layout");
    if (trunc_ < 0) throw InputError("negative hbar truncation order");
  }

  static SuperPoly constant(LayoutPtr layout, const Scalar& c, int truncation = kDefaultTruncation) {
    SuperPoly p(std::move(layout), truncation);
    p.add_term(p.unit_key(), HbarPoly(c, truncation));
    return p;
  }

  static SuperPoly generator(LayoutPtr layout, int id, int truncation = kDefaultTruncation) {
    SuperPoly p(std::move(layout), truncation);
    MonomialKey k = p.unit_key();
    if (id < 0 || id >= p.layout_->size()) throw InputError("generator index out of range");
    if (p.layout_->parity(id) == Parity::even)
      k.even[p.layout_->slot(id)] = 1;
    else
      k.odd = std::uint64_t{1} << p.layout_->slot(id);
    p.add_term(k, HbarPoly(Scalar(1), truncation));
    return p;
  }

  /// c * hbar^k.
  static SuperPoly hbar_power(LayoutPtr layout, int k, const Scalar& c = Scalar(1),
                              int truncation = kDefaultTruncation) {
    SuperPoly p(std::move(layout), truncation);
    p.add_term(p.unit_key(), HbarPoly::monomial(c, k, truncation));
    return p;
  }

  const LayoutPtr& layout() const { return layout_; }
  int truncation() const { return trunc_; }
  const std::map<MonomialKey, HbarPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MonomialKey unit_key() const { return {Exponents(layout_->n_even(), 0), 0}; }

  void add_term(const MonomialKey& k, const HbarPoly& c) {
    if (c.truncation() != trunc_) throw InputError("hbar truncation mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [k, c] : terms_)
      if (k.parity() != p) return false;
    return true;
  }

  /// Parity of a homogeneous element (zero counts as even).
  Parity parity() const {
    if (!is_homogeneous()) throw InputError("element is not homogeneous");
    return terms_.empty() ? Parity::even : terms_.begin()->first.parity();
  }

  SuperPoly part(Parity p) const {
    SuperPoly r(layout_, trunc_);
    for (const auto& [k, c] : terms_)
      if (k.parity() == p) r.terms_.emplace(k, c);
    return r;
  }

  SuperPoly operator-() const {
    SuperPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  SuperPoly& operator+=(const SuperPoly& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SuperPoly& operator-=(const SuperPoly& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SuperPoly& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const Scalar& s) { return a *= s; }
  friend SuperPoly operator*(const Scalar& s, SuperPoly a) { return a *= s; }

  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
    a.require_compatible(b);
    SuperPoly r(a.layout_, a.trunc_);
    const int ne = a.layout_->n_even();
    MonomialKey k{Exponents(ne), 0};
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        int sign = odd_product_sign(ka.odd, kb.odd);
        if (sign == 0) continue;
        for (int m = 0; m < ne; ++m) k.even[m] = ka.even[m] + kb.even[m];
        k.odd = ka.odd | kb.odd;
        HbarPoly c = ca * cb;
        if (sign < 0) c = -c;
        r.add_term(k, c);
      }
    return r;
  }
  SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }

  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return *a.layout_ == *b.layout_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// Left derivative: the generator is brought to the front, then removed.
  SuperPoly derivative_left(int id) const { return derivative(id, false); }
  /// Right derivative: the generator is brought to the back, then removed.
  SuperPoly derivative_right(int id) const { return derivative(id, true); }

  /// Replaces every hbar-coefficient c by c * h (truncated).
  SuperPoly times(const HbarPoly& h) const {
    SuperPoly r(layout_, trunc_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * h);
    return r;
  }

  void require_compatible(const SuperPoly& o) const {
    if (!(*layout_ == *o.layout_)) throw InputError("SuperPoly generator sets differ");
    if (trunc_ != o.trunc_)
      throw InputError("hbar truncation mismatch: " + std::to_string(trunc_) + " vs " +
                       std::to_string(o.trunc_));
  }

 private:
  SuperPoly derivative(int id, bool right) const {
    if (id < 0 || id >= layout_->size())
      throw InputError("generator index " + std::to_string(id + 1) + " out of range");
    SuperPoly r(layout_, trunc_);
    const int s = layout_->slot(id);
    if (layout_->parity(id) == Parity::even) {
      for (const auto& [k, c] : terms_) {
        if (k.even[s] == 0) continue;
        MonomialKey nk = k;
        --nk.even[s];
        r.add_term(nk, c * Scalar(k.even[s]));
      }
      return r;
    }
    const std::uint64_t bit = std::uint64_t{1} << s;
    for (const auto& [k, c] : terms_) {
      if (!(k.odd & bit)) continue;
      std::uint64_t passed = right ? (k.odd >> (s + 1)) : (k.odd & (bit - 1));
      MonomialKey nk = k;
      nk.odd &= ~bit;
      r.add_term(nk, std::popcount(passed) % 2 ? -c : c);
    }
    return r;
  }

  LayoutPtr layout_;
  int trunc_;
  std::map<MonomialKey, HbarPoly> terms_;
};

/// Embeds a polynomial in x as an even element, x_k -> generator ids[k].
inline SuperPoly embed(const Polynomial& p, const LayoutPtr& layout, const std::vector<int>& ids,
                       int truncation = kDefaultTruncation) {
  if (static_cast<int>(ids.size()) != p.dim()) throw InputError("dimension mismatch");
  SuperPoly r(layout, truncation);
  for (const auto& [e, c] : p.terms()) {
    MonomialKey k = r.unit_key();
    for (int m = 0; m < p.dim(); ++m) {
      if (layout->parity(ids[m]) != Parity::even) throw InputError("cannot embed into odd generator");
      k.even[layout->slot(ids[m])] += e[m];
    }
    r.add_term(k, HbarPoly(c, truncation));
  }
  return r;
}

/// p(x0 + xi) on the phase-space layout of dimension p.dim().
inline SuperPoly taylor_shift(const Polynomial& p, const std::vector<Scalar>& x0,
                              int truncation = kDefaultTruncation) {
  if (static_cast<int>(x0.size()) != p.dim()) throw InputError("basepoint has wrong dimension");
  auto layout = Layout::phase_space(p.dim());
  std::vector<int> ids(p.dim());
  for (int k = 0; k < p.dim(); ++k) ids[k] = k;
  return embed(p.shifted(x0), layout, ids, truncation);
}

/// d/dxi^i on the phase-space layout (0-based i).
inline SuperPoly deriv_even(const SuperPoly& a, int i) {
  int d = a.layout()->n_even();
  if (i < 0 || i >= d) throw InputError("index " + std::to_string(i + 1) + " out of range");
  return a.derivative_left(i);
}

inline SuperPoly deriv_odd_left(const SuperPoly& a, int i) {
  int d = a.layout()->n_even();
  if (i < 0 || i >= d) throw InputError("index " + std::to_string(i + 1) + " out of range");
  return a.derivative_left(d + i);
}

inline SuperPoly deriv_odd_right(const SuperPoly& a, int i) {
  int d = a.layout()->n_even();
  if (i < 0 || i >= d) throw InputError("index " + std::to_string(i + 1) + " out of range");
  return a.derivative_right(d + i);
}

}  // namespace dq
