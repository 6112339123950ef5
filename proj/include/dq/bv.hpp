#pragma once

#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/super_poly.hpp"

namespace dq {

struct Field {
  std::string name;
  Parity parity;
  std::string antifield;  // defaults to name + "_plus"
};

/// Fields v^i with declared parities and antifields v+_i of opposite parity.
/// Generator ids: fields 0..n-1, antifields n..2n-1.
class BVSpace {
 public:
  explicit BVSpace(std::vector<Field> fields) : fields_(std::move(fields)) {
    if (fields_.empty()) throw InputError("a BV space needs at least one field");
    std::vector<Variable> vars;
    for (auto& f : fields_) {
      if (f.antifield.empty()) f.antifield = f.name + "_plus";
      vars.push_back({f.name, f.parity});
    }
    for (const auto& f : fields_) vars.push_back({f.antifield, flip(f.parity)});
    for (std::size_t a = 0; a < vars.size(); ++a) {
      if (vars[a].name == "I" || vars[a].name == "hbar")
        throw InputError("reserved generator name '" + vars[a].name + "'");
      for (std::size_t b = 0; b < a; ++b)
        if (vars[a].name == vars[b].name) throw InputError("duplicate generator '" + vars[a].name + "'");
    }
    layout_ = std::make_shared<const Layout>(std::move(vars));
  }

  /// v = xi (even), v+ = eta (odd): the same generators as Layout::phase_space(d).
  static BVSpace phase_space(int d) {
    std::vector<Field> f;
    for (int i = 1; i <= d; ++i)
      f.push_back({"xi" + std::to_string(i), Parity::even, "eta" + std::to_string(i)});
    return BVSpace(std::move(f));
  }

  int size() const { return static_cast<int>(fields_.size()); }
  const std::vector<Field>& fields() const { return fields_; }
  const LayoutPtr& layout() const { return layout_; }
  int field(int i) const { return i; }
  int antifield(int i) const { return size() + i; }

  void require_member(const SuperPoly& f) const {
    if (!(*f.layout() == *layout_)) throw InputError("functional does not belong to this BV space");
  }

 private:
  std::vector<Field> fields_;
  LayoutPtr layout_;
};

/// (f,g) = sum_i (f d<-/dv^i)(d->/dv+_i g) - (f d<-/dv+_i)(d->/dv^i g).
inline SuperPoly bv_bracket(const BVSpace& space, const SuperPoly& f, const SuperPoly& g) {
  space.require_member(f);
  f.require_compatible(g);
  SuperPoly r(f.layout(), f.truncation());
  for (int i = 0; i < space.size(); ++i) {
    r += f.derivative_right(space.field(i)) * g.derivative_left(space.antifield(i));
    r -= f.derivative_right(space.antifield(i)) * g.derivative_left(space.field(i));
  }
  return r;
}

/// Delta f = sum_i (-1)^{|v^i|} d->/dv+_i d->/dv^i f. For even fields this is
/// d->/dv+_i (f d<-/dv^i); for odd fields that form picks up a (-1)^{|f|+1}
/// and is not second order, so the left-derivative form is used throughout.
inline SuperPoly bv_laplacian(const BVSpace& space, const SuperPoly& f) {
  space.require_member(f);
  SuperPoly r(f.layout(), f.truncation());
  for (int i = 0; i < space.size(); ++i) {
    SuperPoly t = f.derivative_left(space.field(i)).derivative_left(space.antifield(i));
    if (space.fields()[i].parity == Parity::odd)
      r -= t;
    else
      r += t;
  }
  return r;
}

struct AxiomResidual {
  std::string name;
  SuperPoly residual;
  bool holds() const { return residual.is_zero(); }
};

inline int parity_sign(int exponent) { return exponent % 2 ? -1 : 1; }

/// Residuals of the five BV identities on homogeneous f, g, h:
/// (f,g) + (-1)^{(|f|-1)(|g|-1)} (g,f);
/// (f,(g,h)) - ((f,g),h) - (-1)^{(|f|-1)(|g|-1)} (g,(f,h));
/// (f,gh) - (f,g)h - (-1)^{(|f|-1)|g|} g(f,h);
/// (-1)^{|f|}(f,g) - Delta(fg) + Delta(f)g + (-1)^{|f|} f Delta(g);
/// Delta(Delta(f)).
inline std::vector<AxiomResidual> check_bv_axioms(const BVSpace& space, const SuperPoly& f,
                                                  const SuperPoly& g, const SuperPoly& h) {
  for (const SuperPoly* x : {&f, &g, &h}) {
    space.require_member(*x);
    if (!x->is_homogeneous()) throw InputError("BV axiom check needs homogeneous inputs");
  }
  const int pf = static_cast<int>(f.parity()), pg = static_cast<int>(g.parity());
  auto br = [&](const SuperPoly& a, const SuperPoly& b) { return bv_bracket(space, a, b); };
  auto lap = [&](const SuperPoly& a) { return bv_laplacian(space, a); };
  const Scalar s_ff(parity_sign((pf + 1) * (pg + 1)));
  const Scalar s_leib(parity_sign((pf + 1) * pg));
  const Scalar s_f(parity_sign(pf));
  std::vector<AxiomResidual> out;
  out.push_back({"antisymmetry", br(f, g) + s_ff * br(g, f)});
  out.push_back({"jacobi", br(f, br(g, h)) - br(br(f, g), h) - s_ff * br(g, br(f, h))});
  out.push_back({"leibniz", br(f, g * h) - br(f, g) * h - s_leib * (g * br(f, h))});
  out.push_back({"compatibility",
                 s_f * br(f, g) - lap(f * g) + lap(f) * g + s_f * (f * lap(g))});
  out.push_back({"nilpotency", lap(lap(f))});
  return out;
}

/// (S,S), the classical master equation residual.
inline SuperPoly classical_residual(const BVSpace& space, const SuperPoly& s) {
  if (!s.is_homogeneous() || s.parity() != Parity::even) throw InputError("action must be even");
  return bv_bracket(space, s, s);
}

/// (S,S) - 2 i hbar Delta(S).
inline SuperPoly qme_residual(const BVSpace& space, const SuperPoly& s) {
  SuperPoly r = classical_residual(space, s);
  HbarPoly two_i_hbar = HbarPoly::monomial(Scalar(Rational(0), Rational(2)), 1, s.truncation());
  return r - bv_laplacian(space, s).times(two_i_hbar);
}

/// Omega(O) = (S,O) - i hbar Delta(O); requires S to solve the quantum master equation.
inline SuperPoly omega(const BVSpace& space, const SuperPoly& s, const SuperPoly& o) {
  if (!qme_residual(space, s).is_zero())
    throw PreconditionError("action does not satisfy the quantum master equation");
  HbarPoly i_hbar = HbarPoly::monomial(Scalar::i(), 1, o.truncation());
  return bv_bracket(space, s, o) - bv_laplacian(space, o).times(i_hbar);
}

}  // namespace dq
