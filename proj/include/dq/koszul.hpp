#pragma once

#include <vector>

#include "dq/multivector.hpp"
#include "dq/poisson.hpp"
#include "dq/wick.hpp"

namespace dq {

/// <w(x0 + xi) | xi> = sum_i w_i(x0 + xi) xi^i.
inline SuperPoly one_form_insertion(const DifferentialForm& w, const std::vector<Scalar>& x0,
                                    int truncation = kDefaultTruncation) {
  require_degree(w, 1, "inserted form");
  require_dim(w.dim(), static_cast<int>(x0.size()));
  const int d = w.dim();
  auto layout = Layout::phase_space(d);
  SuperPoly r(layout, truncation);
  for (int i = 0; i < d; ++i) {
    SuperPoly c = taylor_shift(w({i}), x0, truncation);
    r += c * SuperPoly::generator(layout, i, truncation);
  }
  return r;
}

/// chi^i(x0) eta_i: at the output point only the value of chi survives.
inline SuperPoly vector_insertion(const Multivector& chi, const std::vector<Scalar>& x0,
                                  int truncation = kDefaultTruncation) {
  require_degree(chi, 1, "output field");
  require_dim(chi.dim(), static_cast<int>(x0.size()));
  const int d = chi.dim();
  auto layout = Layout::phase_space(d);
  SuperPoly r(layout, truncation);
  for (int i = 0; i < d; ++i)
    r += SuperPoly::constant(layout, chi({i}).evaluate(x0), truncation) *
         SuperPoly::generator(layout, d + i, truncation);
  return r;
}

/// Weight of the one-vertex diagrams with an output leg: lambda kappa^3.
inline HbarMonomial bullet_weight(const Calibration& cal) { return cal.vertex_weight() * cal.kappa; }

/// Leading term of the expectation of w1(xi) w2(xi) chi with one bivector
/// vertex. The output leg contracts a form slot or differentiates the vertex.
inline HbarMonomial bullet_pairing(const DifferentialForm& w1, const DifferentialForm& w2,
                                   const Multivector& chi, const Multivector& alpha,
                                   const std::vector<Scalar>& x0,
                                   const Calibration& cal = default_calibration()) {
  require_degree(alpha, 2, "bivector");
  require_degree(chi, 1, "output field");
  require_dim(chi.dim(), alpha.dim());
  const std::vector<Insertion> boundary{Insertion::form(w1), Insertion::form(w2)};
  Scalar sum;
  for (int k = 0; k < alpha.dim(); ++k) {
    Scalar c = chi({k}).evaluate(x0);
    if (!c.is_zero()) sum += c * diagram_value(boundary, alpha, 1, x0, {k});
  }
  HbarMonomial w = bullet_weight(cal);
  return {sum * w.coeff, w.power};
}

/// (w1 . w2)_k(x0): the pairing with chi = d_k divided by the diagram weight.
inline std::vector<Scalar> bullet(const DifferentialForm& w1, const DifferentialForm& w2,
                                  const Multivector& alpha, const std::vector<Scalar>& x0,
                                  const Calibration& cal = default_calibration()) {
  require_dim(w1.dim(), alpha.dim());
  require_dim(w2.dim(), alpha.dim());
  const int d = alpha.dim();
  const HbarMonomial w = bullet_weight(cal);
  std::vector<Scalar> out;
  for (int k = 0; k < d; ++k) {
    Multivector chi(d, 1);
    chi.add({k}, Polynomial(d, Scalar(1)));
    out.push_back(bullet_pairing(w1, w2, chi, alpha, x0, cal).coeff / w.coeff);
  }
  return out;
}

/// w1 . w2 as a 1-form, basepoint kept symbolic.
inline DifferentialForm bullet_symbolic(const DifferentialForm& w1, const DifferentialForm& w2,
                                        const Multivector& alpha) {
  require_degree(alpha, 2, "bivector");
  require_dim(w1.dim(), alpha.dim());
  require_dim(w2.dim(), alpha.dim());
  const std::vector<Insertion> boundary{Insertion::form(w1), Insertion::form(w2)};
  DifferentialForm r(alpha.dim(), 1);
  for (int k = 0; k < alpha.dim(); ++k) r.add({k}, diagram_polynomial(boundary, alpha, 1, {k}));
  return r;
}

/// Magri-Koszul bracket L_{a#w1} w2 - L_{a#w2} w1 - d(a(w1, w2)), where
/// a#w = A^{ij} w_i d_j; gives [df, dg] = d{f,g}.
inline DifferentialForm koszul_bracket(const DifferentialForm& w1, const DifferentialForm& w2,
                                       const Multivector& alpha) {
  require_degree(alpha, 2, "bivector");
  require_degree(w1, 1, "first form");
  require_degree(w2, 1, "second form");
  require_dim(w1.dim(), alpha.dim());
  require_dim(w2.dim(), alpha.dim());
  return lie_derivative(sharp(alpha, w1), w2) - lie_derivative(sharp(alpha, w2), w1) -
         differential(bivector_pairing(alpha, w1, w2));
}

/// (w1 . w2 - w2 . w1) / 2 from the diagram expansion.
inline DifferentialForm koszul_bracket_diagrammatic(const DifferentialForm& w1,
                                                    const DifferentialForm& w2,
                                                    const Multivector& alpha) {
  require_degree(w1, 1, "first form");
  require_degree(w2, 1, "second form");
  return (bullet_symbolic(w1, w2, alpha) - bullet_symbolic(w2, w1, alpha)) *
         Scalar(Rational(1, 2));
}

}  // namespace dq
