#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/polynomial.hpp"

namespace dq {

using IndexList = std::vector<int>;

/// Sorts in place and returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(IndexList& idx) {
  int sign = 1;
  for (std::size_t a = 1; a < idx.size(); ++a)
    for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
      if (idx[b - 1] == idx[b]) return 0;
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  return sign;
}

/// Totally antisymmetric tensor field with polynomial coefficients, stored on
/// strictly ascending index tuples. The tag separates vectors from covectors.
template <class Tag>
class Alternating {
 public:
  Alternating() = default;
  Alternating(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim <= 0) throw InputError("dimension must be positive");
    if (degree < 0) throw InputError("negative degree");
  }

  static Alternating function(const Polynomial& f) {
    Alternating a(f.dim(), 0);
    a.add({}, f);
    return a;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<IndexList, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Component on an arbitrary index tuple (antisymmetry applied).
  Polynomial operator()(IndexList idx) const {
    check_indices(idx);
    int sign = sort_with_sign(idx);
    if (sign == 0) return Polynomial(dim_);
    auto it = comps_.find(idx);
    if (it == comps_.end()) return Polynomial(dim_);
    return sign > 0 ? it->second : -it->second;
  }

  /// Adds value to the component on idx (any order; antisymmetry applied).
  void add(IndexList idx, const Polynomial& value) {
    check_indices(idx);
    if (value.dim() != dim_) throw InputError("component has wrong dimension");
    int sign = sort_with_sign(idx);
    if (sign == 0 || value.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(idx, sign > 0 ? value : -value);
    if (!inserted) {
      if (sign > 0)
        it->second += value;
      else
        it->second -= value;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  bool has_constant_components() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const auto& kv) { return kv.second.is_constant(); });
  }

  Alternating operator-() const {
    Alternating r = *this;
    for (auto& [k, v] : r.comps_) v = -v;
    return r;
  }
  Alternating& operator+=(const Alternating& o) {
    require_shape(o);
    for (const auto& [k, v] : o.comps_) add(k, v);
    return *this;
  }
  Alternating& operator-=(const Alternating& o) {
    require_shape(o);
    for (const auto& [k, v] : o.comps_) add(k, -v);
    return *this;
  }
  Alternating& operator*=(const Scalar& s) {
    if (s.is_zero()) comps_.clear();
    for (auto& [k, v] : comps_) v *= s;
    return *this;
  }
  Alternating& operator*=(const Polynomial& f) {
    std::map<IndexList, Polynomial> out;
    for (auto& [k, v] : comps_) {
      Polynomial p = v * f;
      if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    comps_ = std::move(out);
    return *this;
  }
  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
  friend Alternating operator*(Alternating a, const Scalar& s) { return a *= s; }
  friend Alternating operator*(const Scalar& s, Alternating a) { return a *= s; }
  friend Alternating operator*(const Polynomial& f, Alternating a) { return a *= f; }

  friend bool operator==(const Alternating& a, const Alternating& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

  void require_shape(const Alternating& o) const {
    if (o.dim_ != dim_) throw InputError("dimension mismatch");
    if (o.degree_ != degree_) throw InputError("degree mismatch");
  }

 private:
  void check_indices(const IndexList& idx) const {
    if (static_cast<int>(idx.size()) != degree_)
      throw InputError("expected " + std::to_string(degree_) + " indices");
    for (int i : idx)
      if (i < 0 || i >= dim_) throw InputError("index " + std::to_string(i + 1) + " out of range");
  }

  int dim_ = 0;
  int degree_ = 0;
  std::map<IndexList, Polynomial> comps_;
};

struct MultivectorTag {};
struct FormTag {};

/// Multivector field sum_{i1<..<ip} psi^{i1..ip} d_{i1} ^ .. ^ d_{ip}.
using Multivector = Alternating<MultivectorTag>;
/// Differential form sum_{i1<..<iq} w_{i1..iq} dx^{i1} ^ .. ^ dx^{iq}.
using DifferentialForm = Alternating<FormTag>;

inline void require_degree(const Multivector& m, int p, const char* what) {
  if (m.degree() != p)
    throw InputError(std::string(what) + " must have degree " + std::to_string(p) + ", got " +
                     std::to_string(m.degree()));
}
inline void require_degree(const DifferentialForm& w, int q, const char* what) {
  if (w.degree() != q)
    throw InputError(std::string(what) + " must have degree " + std::to_string(q) + ", got " +
                     std::to_string(w.degree()));
}

inline Polynomial as_function(const Multivector& m) {
  require_degree(m, 0, "function");
  return m({});
}
inline Polynomial as_function(const DifferentialForm& w) {
  require_degree(w, 0, "function");
  return w({});
}

inline DifferentialForm exterior_derivative(const DifferentialForm& w) {
  if (w.degree() >= w.dim()) return DifferentialForm(w.dim(), w.degree() + 1);
  DifferentialForm r(w.dim(), w.degree() + 1);
  for (const auto& [idx, c] : w.components())
    for (int i = 0; i < w.dim(); ++i) {
      IndexList full{i};
      full.insert(full.end(), idx.begin(), idx.end());
      r.add(full, c.derivative(i));
    }
  return r;
}

inline DifferentialForm differential(const Polynomial& f) {
  return exterior_derivative(DifferentialForm::function(f));
}

/// Contraction of a vector field into the first slot of a form.
inline DifferentialForm interior(const Multivector& x, const DifferentialForm& w) {
  require_degree(x, 1, "contracted field");
  if (x.dim() != w.dim()) throw InputError("dimension mismatch");
  if (w.degree() == 0) return DifferentialForm(w.dim(), 0);
  DifferentialForm r(w.dim(), w.degree() - 1);
  for (const auto& [idx, c] : w.components())
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      IndexList rest = idx;
      rest.erase(rest.begin() + static_cast<long>(pos));
      Polynomial term = x({idx[pos]}) * c;
      r.add(rest, pos % 2 ? -term : term);
    }
  return r;
}

/// Lie derivative by Cartan's formula L_X = d i_X + i_X d.
inline DifferentialForm lie_derivative(const Multivector& x, const DifferentialForm& w) {
  DifferentialForm r = interior(x, exterior_derivative(w));
  if (w.degree() > 0) r += exterior_derivative(interior(x, w));
  return r;
}

/// Full antisymmetric component A^{ij} of a bivector.
inline Polynomial bivector_entry(const Multivector& a, int i, int j) { return a({i, j}); }

/// The vector field A^{ij} w_i d_j.
inline Multivector sharp(const Multivector& a, const DifferentialForm& w) {
  require_degree(a, 2, "bivector");
  require_degree(w, 1, "1-form");
  Multivector r(a.dim(), 1);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.add({j}, a({i, j}) * w({i}));
  return r;
}

/// A^{ij} w1_i w2_j.
inline Polynomial bivector_pairing(const Multivector& a, const DifferentialForm& w1,
                                   const DifferentialForm& w2) {
  require_degree(a, 2, "bivector");
  Polynomial r(a.dim());
  for (const auto& [idx, c] : a.components()) {
    int i = idx[0], j = idx[1];
    r += c * (w1({i}) * w2({j}) - w1({j}) * w2({i}));
  }
  return r;
}

}  // namespace dq
