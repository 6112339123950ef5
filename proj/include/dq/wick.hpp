#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dq/errors.hpp"
#include "dq/hbar_poly.hpp"
#include "dq/multivector.hpp"
#include "dq/poisson.hpp"
#include "dq/super_poly.hpp"

namespace dq {

/// c * hbar^power; the power may be negative (vertex weights carry 1/hbar).
struct HbarMonomial {
  Scalar coeff{1};
  int power = 0;

  friend HbarMonomial operator*(const HbarMonomial& a, const HbarMonomial& b) {
    return {a.coeff * b.coeff, a.power + b.power};
  }
  HbarMonomial pow(int n) const { return {coeff.pow(n), power * n}; }
  friend bool operator==(const HbarMonomial&, const HbarMonomial&) = default;

  HbarPoly to_poly(int truncation) const {
    if (power < 0) throw InvariantError("negative hbar power cannot enter a series");
    return HbarPoly::monomial(coeff, power, truncation);
  }
};

inline std::string to_string(const HbarMonomial& m) {
  return "(" + to_string(m.coeff) + ")*hbar^" + std::to_string(m.power);
}

/// <xi^i eta_j> = kappa delta^i_j; every other pairing vanishes.
struct Propagator {
  HbarMonomial kappa{Scalar(Rational(0), Rational(-1)), 1};
};

/// Expectation of a single-copy phase-space element: xi^S eta_S contributes
/// kappa^|S| (eta's already in ascending order, xi's commute), others vanish.
inline HbarPoly expectation(const SuperPoly& m, const Propagator& prop = {}) {
  const int d = m.layout()->n_even();
  if (!(*m.layout() == *Layout::phase_space(d))) throw InputError("not a phase-space element");
  if (prop.kappa.power < 1) throw InputError("propagator must raise the hbar order");
  HbarPoly r(m.truncation());
  for (const auto& [k, c] : m.terms()) {
    bool matched = true;
    for (int i = 0; i < d && matched; ++i) matched = k.even[i] == static_cast<int>(k.odd >> i & 1);
    if (!matched) continue;
    r += c * prop.kappa.pow(k.odd_degree()).to_poly(m.truncation());
  }
  return r;
}

struct Calibration {
  HbarMonomial kappa;
  HbarMonomial lambda;
  /// Weight of one bivector vertex with both legs contracted: lambda kappa^2.
  HbarMonomial vertex_weight() const { return lambda * kappa.pow(2); }
};

struct WickConfig {
  int max_order = 6;
  /// Cap on contracted legs per diagram (two per vertex).
  int max_legs = 14;
};

/// An input placed at a point of the diagram: a function, or a 1-form whose
/// explicit form slot must absorb exactly one leg (selecting the component).
struct Insertion {
  std::vector<Polynomial> coeffs;  // size 1 for a function, d for a 1-form
  bool one_form = false;

  static Insertion function(const Polynomial& f) { return {{f}, false}; }
  static Insertion form(const DifferentialForm& w) {
    require_degree(w, 1, "inserted form");
    Insertion ins{{}, true};
    for (int i = 0; i < w.dim(); ++i) ins.coeffs.push_back(w({i}));
    return ins;
  }
};

namespace detail {

struct DegreeBound {
  std::vector<int> per_var;
  int total = -1;

  static DegreeBound of(const std::vector<const Polynomial*>& polys, int dim) {
    DegreeBound b{std::vector<int>(dim, -1), -1};
    for (const Polynomial* p : polys) {
      b.total = std::max(b.total, p->degree());
      for (int v = 0; v < dim; ++v) b.per_var[v] = std::max(b.per_var[v], p->degree_in(v));
    }
    return b;
  }
  bool admits(const Exponents& e) const {
    int sum = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > per_var[v]) return false;
      sum += e[v];
    }
    return sum <= total;
  }
};

/// Sums all labeled diagrams with a fixed number of bivector vertices.
/// Each vertex a^{ij} (i<j) sends leg i and leg j to distinct targets and
/// carries the sign of the permutation ordering its legs by target. A leg
/// landing on a coefficient differentiates it; tadpoles are included.
/// External legs (fixed indices) may hit form slots or vertices only.
template <class Value, class Eval>
class DiagramSum {
 public:
  DiagramSum(const std::vector<Insertion>& boundary, const Multivector& alpha, int vertices,
             std::vector<int> external, Eval eval)
      : boundary_(boundary), alpha_(alpha), n_(vertices), external_(std::move(external)),
        eval_(std::move(eval)), dim_(alpha.dim()) {
    for (const auto& [idx, c] : alpha.components()) keys_.push_back({idx[0], idx[1], &c});
    for (std::size_t b = 0; b < boundary_.size(); ++b) {
      std::vector<const Polynomial*> polys;
      for (const auto& p : boundary_[b].coeffs) {
        require_dim(p.dim(), dim_);
        polys.push_back(&p);
      }
      targets_.push_back({static_cast<int>(b), -1, false, DegreeBound::of(polys, dim_)});
      if (boundary_[b].one_form) targets_.push_back({static_cast<int>(b), -1, true, {}});
    }
    first_vertex_ = static_cast<int>(targets_.size());
    for (int v = 0; v < n_; ++v) targets_.push_back({-1, v, false, {}});
    deriv_.assign(targets_.size(), Exponents(dim_, 0));
    slot_.assign(targets_.size(), -1);
    key_.assign(n_, -1);
  }

  Value run() {
    total_ = Value{};
    has_total_ = false;
    vertex(0, 1);
    return has_total_ ? total_ : eval_(Polynomial(dim_));
  }

 private:
  struct Key {
    int i, j;
    const Polynomial* poly;
  };
  struct Target {
    int boundary;  // owning insertion, or -1 for a vertex
    int vertex;
    bool form_slot;
    DegreeBound bound;
  };

  bool feasible(int t) const {
    const Target& tg = targets_[t];
    if (tg.boundary >= 0) return tg.bound.admits(deriv_[t]);
    int k = key_[tg.vertex];
    if (k < 0) return true;
    return key_bounds_.at(k).admits(deriv_[t]);
  }

  bool apply(int t, int index) {
    if (targets_[t].form_slot) {
      if (slot_[t] >= 0) return false;
      slot_[t] = index;
      return true;
    }
    ++deriv_[t][index];
    if (feasible(t)) return true;
    --deriv_[t][index];
    return false;
  }
  void undo(int t, int index) {
    if (targets_[t].form_slot)
      slot_[t] = -1;
    else
      --deriv_[t][index];
  }

  void vertex(int v, int sign) {
    if (v == n_) return external(0, sign);
    if (key_bounds_.empty())
      for (const Key& k : keys_) key_bounds_.push_back(DegreeBound::of({k.poly}, dim_));
    const int self = first_vertex_ + v;
    const int nt = static_cast<int>(targets_.size());
    for (int k = 0; k < static_cast<int>(keys_.size()); ++k) {
      key_[v] = k;
      if (!feasible(self)) continue;
      for (int ta = 0; ta < nt; ++ta) {
        if (!apply(ta, keys_[k].i)) continue;
        for (int tb = 0; tb < nt; ++tb) {
          if (tb == ta || !apply(tb, keys_[k].j)) continue;
          vertex(v + 1, ta < tb ? sign : -sign);
          undo(tb, keys_[k].j);
        }
        undo(ta, keys_[k].i);
      }
    }
    key_[v] = -1;
  }

  void external(std::size_t e, int sign) {
    if (e == external_.size()) return leaf(sign);
    for (int t = 0; t < static_cast<int>(targets_.size()); ++t) {
      if (targets_[t].boundary >= 0 && !targets_[t].form_slot) continue;
      if (!apply(t, external_[e])) continue;
      external(e + 1, sign);
      undo(t, external_[e]);
    }
  }

  const Value& derivative_value(int poly_id, const Polynomial& p, const Exponents& e) {
    auto key = std::make_pair(poly_id, e);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, eval_(p.derivative(e))).first;
    return it->second;
  }

  void leaf(int sign) {
    for (std::size_t t = 0; t < targets_.size(); ++t)
      if (targets_[t].form_slot && slot_[t] < 0) return;
    Value value = eval_(Polynomial(dim_, Scalar(sign)));
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      const Target& tg = targets_[t];
      if (tg.form_slot) continue;
      if (tg.boundary >= 0) {
        const Insertion& ins = boundary_[tg.boundary];
        int comp = ins.one_form ? slot_[t + 1] : 0;
        int id = tg.boundary * (dim_ + 1) + comp;
        value = value * derivative_value(id, ins.coeffs[comp], deriv_[t]);
      } else {
        int k = key_[tg.vertex];
        int id = -1 - k;
        value = value * derivative_value(id, *keys_[k].poly, deriv_[t]);
      }
      if (is_zero(value)) return;
    }
    if (has_total_)
      total_ = total_ + value;
    else
      total_ = value;
    has_total_ = true;
  }

  static bool is_zero(const Value& v) { return v.is_zero(); }

  const std::vector<Insertion>& boundary_;
  const Multivector& alpha_;
  int n_;
  std::vector<int> external_;
  Eval eval_;
  int dim_;
  std::vector<Key> keys_;
  std::vector<DegreeBound> key_bounds_;
  std::vector<Target> targets_;
  int first_vertex_ = 0;
  std::vector<Exponents> deriv_;
  std::vector<int> slot_;
  std::vector<int> key_;
  std::map<std::pair<int, Exponents>, Value> cache_;
  Value total_{};
  bool has_total_ = false;
};

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace detail

/// Sum over diagrams with n vertices, each derivative evaluated at x0.
inline Scalar diagram_value(const std::vector<Insertion>& boundary, const Multivector& alpha, int n,
                            const std::vector<Scalar>& x0, const std::vector<int>& external = {}) {
  auto eval = [&x0](const Polynomial& p) { return p.evaluate(x0); };
  return detail::DiagramSum<Scalar, decltype(eval)>(boundary, alpha, n, external, eval).run();
}

/// Same sum with the basepoint kept symbolic.
inline Polynomial diagram_polynomial(const std::vector<Insertion>& boundary, const Multivector& alpha,
                                     int n, const std::vector<int>& external = {}) {
  auto eval = [](const Polynomial& p) { return p; };
  return detail::DiagramSum<Polynomial, decltype(eval)>(boundary, alpha, n, external, eval).run();
}

/// Fixes lambda from the probe so that the antisymmetric hbar^1 part of f*g
/// is (i/2){f,g}(x0); kappa is declared.
inline Calibration calibrate(const Multivector& alpha_probe, const Polynomial& f_probe,
                             const Polynomial& g_probe, const HbarMonomial& kappa = Propagator{}.kappa) {
  require_degree(alpha_probe, 2, "probe bivector");
  std::vector<Scalar> origin(alpha_probe.dim());
  auto raw = [&](const Polynomial& a, const Polynomial& b) {
    return diagram_value({Insertion::function(a), Insertion::function(b)}, alpha_probe, 1, origin);
  };
  Scalar antisym = (raw(f_probe, g_probe) - raw(g_probe, f_probe)) * Scalar(Rational(1, 2));
  Scalar bracket = poisson_bracket(f_probe, g_probe, alpha_probe).evaluate(origin);
  if (antisym.is_zero() || bracket.is_zero())
    throw InvariantError("calibration probe has no first-order antisymmetric part");
  // lambda kappa^2 antisym = (i/2) {f,g} hbar
  Scalar coeff = Scalar(Rational(0), Rational(1, 2)) * bracket / (kappa.coeff.pow(2) * antisym);
  Calibration cal{kappa, {coeff, 1 - 2 * kappa.power}};
  if (cal.vertex_weight().power != 1) throw InvariantError("vertex weight is not first order");
  return cal;
}

/// Calibration on d1^d2 with f = x1, g = x2 and kappa = -i hbar.
inline const Calibration& default_calibration() {
  static const Calibration cal = calibrate(fixtures::canonical2d(), Polynomial::variable(2, 0),
                                           Polynomial::variable(2, 1));
  return cal;
}

struct StarSeries {
  std::vector<Scalar> basepoint;
  HbarPoly series;
};

inline void check_order(int order, int dim, const WickConfig& config) {
  if (order < 0) throw InputError("order must be nonnegative");
  if (order > config.max_order || 2 * order > config.max_legs) {
    Rational estimate = 1;
    Rational keys = dim * (dim - 1) / 2;
    for (int k = 0; k < order; ++k) estimate *= keys * (order + 2) * (order + 2);
    throw ResourceError("order " + std::to_string(order) + " exceeds the configured maximum " +
                            std::to_string(std::min(config.max_order, config.max_legs / 2)),
                        "~" + to_string(estimate) + " labeled diagrams");
  }
}

/// f*g at x0 through hbar^order from the diagram expansion of the
/// finite-dimensional integral; (lambda kappa^2)^n / n! per n vertices.
inline StarSeries star(const Polynomial& f, const Polynomial& g, const Multivector& alpha,
                       const std::vector<Scalar>& x0, int order,
                       const Calibration& cal = default_calibration(), const WickConfig& config = {}) {
  require_degree(alpha, 2, "bivector");
  require_dim(f.dim(), alpha.dim());
  require_dim(g.dim(), alpha.dim());
  require_dim(static_cast<int>(x0.size()), alpha.dim());
  check_order(order, alpha.dim(), config);
  const HbarMonomial w = cal.vertex_weight();
  StarSeries out{x0, HbarPoly(order)};
  const std::vector<Insertion> boundary{Insertion::function(f), Insertion::function(g)};
  for (int n = 0; n * w.power <= order; ++n) {
    Scalar v = diagram_value(boundary, alpha, n, x0);
    out.series[n * w.power] += v * w.coeff.pow(n) / Scalar(detail::factorial(n));
  }
  return out;
}

/// f*g as polynomials in x: entry k is the hbar^k coefficient.
inline std::vector<Polynomial> star_symbolic(const Polynomial& f, const Polynomial& g,
                                             const Multivector& alpha, int order,
                                             const Calibration& cal = default_calibration(),
                                             const WickConfig& config = {}) {
  require_degree(alpha, 2, "bivector");
  require_dim(f.dim(), alpha.dim());
  require_dim(g.dim(), alpha.dim());
  check_order(order, alpha.dim(), config);
  const HbarMonomial w = cal.vertex_weight();
  std::vector<Polynomial> out(order + 1, Polynomial(alpha.dim()));
  const std::vector<Insertion> boundary{Insertion::function(f), Insertion::function(g)};
  for (int n = 0; n * w.power <= order; ++n) {
    Polynomial v = diagram_polynomial(boundary, alpha, n);
    out[n * w.power] += v * (w.coeff.pow(n) / Scalar(detail::factorial(n)));
  }
  return out;
}

/// Closed Moyal sum: sum_n (1/n!) (i hbar/2)^n A^{i1j1}..A^{injn} d_I f d_J g at x0.
inline StarSeries moyal(const Polynomial& f, const Polynomial& g, const Multivector& alpha,
                        const std::vector<Scalar>& x0, int order, const WickConfig& config = {}) {
  require_degree(alpha, 2, "bivector");
  require_dim(f.dim(), alpha.dim());
  require_dim(g.dim(), alpha.dim());
  require_dim(static_cast<int>(x0.size()), alpha.dim());
  if (!alpha.has_constant_components()) throw InputError("moyal requires constant components");
  check_order(order, alpha.dim(), config);
  const int d = alpha.dim();
  std::vector<std::vector<Scalar>> a(d, std::vector<Scalar>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = alpha({i, j}).constant_term();
  StarSeries out{x0, HbarPoly(order)};
  const Scalar half_i(Rational(0), Rational(1, 2));
  for (int n = 0; n <= order; ++n) {
    Scalar sum;
    std::vector<int> idx(2 * n, 0);
    for (;;) {
      Scalar weight(1);
      Exponents df(d, 0), dg(d, 0);
      for (int m = 0; m < n && !weight.is_zero(); ++m) {
        weight *= a[idx[2 * m]][idx[2 * m + 1]];
        ++df[idx[2 * m]];
        ++dg[idx[2 * m + 1]];
      }
      if (!weight.is_zero())
        sum += weight * f.derivative(df).evaluate(x0) * g.derivative(dg).evaluate(x0);
      int pos = 0;
      while (pos < 2 * n && ++idx[pos] == d) idx[pos++] = 0;
      if (pos == 2 * n) break;
    }
    out.series[n] = sum * half_i.pow(n) / Scalar(detail::factorial(n));
  }
  return out;
}

/// ((f*g)*h - f*(g*h)) at x0 through hbar^order. The inner product is
/// expanded with a symbolic basepoint, the outer one at x0.
inline HbarPoly associator(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                           const Multivector& alpha, const std::vector<Scalar>& x0, int order,
                           const Calibration& cal = default_calibration(),
                           const WickConfig& config = {}) {
  require_dim(h.dim(), alpha.dim());
  std::vector<Polynomial> fg = star_symbolic(f, g, alpha, order, cal, config);
  std::vector<Polynomial> gh = star_symbolic(g, h, alpha, order, cal, config);
  HbarPoly out(order);
  for (int k = 0; k <= order; ++k) {
    HbarPoly left = star(fg[k], h, alpha, x0, order - k, cal, config).series;
    HbarPoly right = star(f, gh[k], alpha, x0, order - k, cal, config).series;
    for (int m = 0; m + k <= order; ++m) out[m + k] += left[m] - right[m];
  }
  return out;
}

}  // namespace dq
