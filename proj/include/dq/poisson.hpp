#pragma once

#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/multivector.hpp"
#include "dq/super_poly.hpp"

namespace dq {

inline void require_dim(int a, int b) {
  if (a != b)
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

/// S_psi(xi, eta) = (-1)^p sum_{i1<..<ip} psi^{i1..ip}(x0 + xi) eta_{i1}..eta_{ip}.
/// The sign makes the antibracket of symbols the symbol of the Schouten bracket.
inline SuperPoly symbol(const Multivector& psi, const std::vector<Scalar>& x0,
                        int truncation = kDefaultTruncation) {
  require_dim(psi.dim(), static_cast<int>(x0.size()));
  const int d = psi.dim();
  auto layout = Layout::phase_space(d);
  SuperPoly r(layout, truncation);
  const Scalar sign(psi.degree() % 2 ? -1 : 1);
  for (const auto& [idx, c] : psi.components()) {
    SuperPoly odd = SuperPoly::constant(layout, sign, truncation);
    for (int i : idx) odd *= SuperPoly::generator(layout, d + i, truncation);
    r += taylor_shift(c, x0, truncation) * odd;
  }
  return r;
}

/// Inverse of symbol at the origin: reads xi as x. hbar-dependent terms are rejected.
inline Multivector multivector_from_symbol(const SuperPoly& s, int degree) {
  const int d = s.layout()->n_even();
  if (!(*s.layout() == *Layout::phase_space(d))) throw InputError("not a phase-space element");
  Multivector r(d, degree);
  const Scalar sign(degree % 2 ? -1 : 1);
  for (const auto& [k, c] : s.terms()) {
    if (k.odd_degree() != degree) throw InputError("symbol has mixed odd degree");
    for (int h = 1; h <= c.truncation(); ++h)
      if (!c[h].is_zero()) throw InputError("symbol depends on hbar");
    IndexList idx;
    for (int i = 0; i < d; ++i)
      if (k.odd >> i & 1) idx.push_back(i);
    Polynomial p(d);
    p.add_term(k.even, c[0] * sign);
    r.add(idx, p);
  }
  return r;
}

/// (F,G) = sum_i (F d<-/dxi^i)(d->/deta_i G) - (F d<-/deta_i)(d->/dxi^i G).
inline SuperPoly antibracket(const SuperPoly& f, const SuperPoly& g) {
  f.require_compatible(g);
  const int d = f.layout()->n_even();
  SuperPoly r(f.layout(), f.truncation());
  for (int i = 0; i < d; ++i) {
    r += f.derivative_right(i) * g.derivative_left(d + i);
    r -= f.derivative_right(d + i) * g.derivative_left(i);
  }
  return r;
}

/// Schouten-Nijenhuis bracket, defined through symbols and the antibracket.
/// Extends the Lie bracket of vector fields; [X, f] = X(f).
inline Multivector schouten(const Multivector& a, const Multivector& b) {
  require_dim(a.dim(), b.dim());
  if (a.degree() + b.degree() == 0) return Multivector(a.dim(), 0);
  std::vector<Scalar> origin(a.dim());
  SuperPoly s = antibracket(symbol(a, origin, 0), symbol(b, origin, 0));
  return multivector_from_symbol(s, a.degree() + b.degree() - 1);
}

inline bool is_poisson(const Multivector& alpha) {
  require_degree(alpha, 2, "Poisson structure");
  return schouten(alpha, alpha).is_zero();
}

/// {f,g} = sum_{i<j} a^{ij} (d_i f d_j g - d_j f d_i g).
inline Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, const Multivector& alpha) {
  require_degree(alpha, 2, "Poisson structure");
  require_dim(f.dim(), alpha.dim());
  require_dim(g.dim(), alpha.dim());
  Polynomial r(alpha.dim());
  for (const auto& [idx, a] : alpha.components()) {
    int i = idx[0], j = idx[1];
    r += a * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
  }
  return r;
}

/// delta F = (S_alpha, F); on generators delta xi^i = A^{ij}(x0+xi) eta_j and
/// delta eta_i = 1/2 d_i A^{jk}(x0+xi) eta_j eta_k.
inline SuperPoly poisson_differential(const Multivector& alpha, const SuperPoly& f,
                                      const std::vector<Scalar>& x0) {
  require_degree(alpha, 2, "Poisson structure");
  require_dim(alpha.dim(), f.layout()->n_even());
  return antibracket(symbol(alpha, x0, f.truncation()), f);
}

namespace fixtures {

inline Polynomial coordinate(int d, int i) { return Polynomial::variable(d, i); }

/// d1 ^ d2 on R^2.
inline Multivector canonical2d() {
  Multivector a(2, 2);
  a.add({0, 1}, Polynomial(2, Scalar(1)));
  return a;
}

/// Lie-Poisson structure of so(3): x3 d1^d2 + x1 d2^d3 + x2 d3^d1.
inline Multivector so3() {
  Multivector a(3, 2);
  a.add({0, 1}, coordinate(3, 2));
  a.add({1, 2}, coordinate(3, 0));
  a.add({2, 0}, coordinate(3, 1));
  return a;
}

/// d1^d2 + x1 d3^d4 on R^4; [a,a] != 0.
inline Multivector nonpoisson4d() {
  Multivector a(4, 2);
  a.add({0, 1}, Polynomial(4, Scalar(1)));
  a.add({2, 3}, coordinate(4, 0));
  return a;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"canonical2d", "so3", "nonpoisson4d"};
  return n;
}

inline Multivector by_name(const std::string& name) {
  if (name == "canonical2d") return canonical2d();
  if (name == "so3") return so3();
  if (name == "nonpoisson4d") return nonpoisson4d();
  throw InputError("unknown structure '" + name + "'");
}

}  // namespace fixtures

}  // namespace dq
