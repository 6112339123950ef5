#pragma once

#include <map>

#include "dq/multivector.hpp"

namespace dq::oracle {

/// Multivector as theta-polynomial: ascending index list -> coefficient.
using ThetaPoly = std::map<IndexList, Polynomial>;

inline ThetaPoly theta_poly(const Multivector& m) { return {m.components().begin(), m.components().end()}; }

/// theta_I theta_J in ascending order; returns 0 on overlap.
inline int merge_sign(const IndexList& a, const IndexList& b, IndexList& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  int inversions = 0;
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t y = x + 1; y < out.size(); ++y) {
      if (out[x] == out[y]) return 0;
      if (out[x] > out[y]) ++inversions;
    }
  std::sort(out.begin(), out.end());
  return inversions % 2 ? -1 : 1;
}

inline void accumulate(ThetaPoly& acc, const IndexList& idx, const Polynomial& c) {
  auto [it, inserted] = acc.try_emplace(idx, c);
  if (!inserted) it->second += c;
}

/// Right derivative in theta_i: move theta_i to the back and drop it.
inline ThetaPoly right_theta_derivative(const ThetaPoly& p, int i) {
  ThetaPoly r;
  for (const auto& [idx, c] : p) {
    auto pos = std::find(idx.begin(), idx.end(), i);
    if (pos == idx.end()) continue;
    long after = idx.end() - pos - 1;
    IndexList rest = idx;
    rest.erase(rest.begin() + (pos - idx.begin()));
    accumulate(r, rest, after % 2 ? -c : c);
  }
  return r;
}

inline ThetaPoly x_derivative(const ThetaPoly& p, int i) {
  ThetaPoly r;
  for (const auto& [idx, c] : p) accumulate(r, idx, c.derivative(i));
  return r;
}

inline ThetaPoly product(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly r;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      IndexList out;
      int s = merge_sign(ia, ib, out);
      if (s) accumulate(r, out, s > 0 ? ca * cb : -(ca * cb));
    }
  return r;
}

/// [P,Q] = sum_i (P d<-/dtheta_i)(d_i Q) - (-1)^{(p-1)(q-1)} (Q d<-/dtheta_i)(d_i P).
inline Multivector schouten_direct(const Multivector& p, const Multivector& q) {
  const int d = p.dim();
  const int deg = p.degree() + q.degree() - 1;
  if (deg < 0) return Multivector(d, 0);
  ThetaPoly P = theta_poly(p), Q = theta_poly(q), acc;
  const bool flip = ((p.degree() - 1) * (q.degree() - 1)) % 2 != 0;
  for (int i = 0; i < d; ++i) {
    for (const auto& [idx, c] : product(right_theta_derivative(P, i), x_derivative(Q, i)))
      accumulate(acc, idx, c);
    for (const auto& [idx, c] : product(right_theta_derivative(Q, i), x_derivative(P, i)))
      accumulate(acc, idx, flip ? c : -c);
  }
  Multivector r(d, deg);
  for (const auto& [idx, c] : acc) r.add(idx, c);
  return r;
}

}  // namespace dq::oracle
