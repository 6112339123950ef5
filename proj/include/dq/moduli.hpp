#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dq/errors.hpp"

namespace dq {

/// Planar rooted tree: leaves are the boundary inputs in order (first = 0,
/// last = 1), the root is the output point at infinity. Internal vertices
/// have arity >= 2; the corolla is the open cell itself.
struct Stratum {
  std::vector<Stratum> children;

  bool is_leaf() const { return children.empty(); }

  int leaves() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
  }
  int internal_vertices() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.internal_vertices();
    return n;
  }
  int codimension() const { return internal_vertices() - 1; }

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

namespace detail {

inline void write_tree(const Stratum& t, int& next_leaf, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(next_leaf++);
    return;
  }
  out += '(';
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k) out += ' ';
    write_tree(t.children[k], next_leaf, out);
  }
  out += ')';
}

inline void check_n(int n, int minimum) {
  if (n < minimum) throw InputError("n must be at least " + std::to_string(minimum));
  if (n > 12) throw InputError("n above 12 is outside the supported range");
}

/// All planar trees with n leaves, arity >= 2 everywhere.
inline std::vector<Stratum> all_trees(int n);

inline void split(int remaining, int parts_left, std::vector<int>& parts,
                  std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(parts);
    return;
  }
  for (int p = 1; p <= remaining - (parts_left - 1); ++p) {
    parts.push_back(p);
    split(remaining - p, parts_left - 1, parts, out);
    parts.pop_back();
  }
}

inline std::vector<Stratum> all_trees(int n) {
  if (n == 1) return {Stratum{}};
  std::vector<Stratum> out;
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<int>> compositions;
    std::vector<int> parts;
    split(n, k, parts, compositions);
    for (const auto& comp : compositions) {
      std::vector<Stratum> partial{Stratum{}};
      for (int size : comp) {
        std::vector<Stratum> next;
        for (const auto& prefix : partial)
          for (const auto& child : all_trees(size)) {
            Stratum t = prefix;
            t.children.push_back(child);
            next.push_back(std::move(t));
          }
        partial = std::move(next);
      }
      for (auto& t : partial) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace detail

/// Nested-parenthesis form with leaves numbered 1..n, e.g. "((1 2) 3)".
inline std::string to_string(const Stratum& t) {
  std::string out;
  int next = 1;
  detail::write_tree(t, next, out);
  return out;
}

inline Stratum corolla(int arity) {
  Stratum t;
  t.children.assign(arity, Stratum{});
  return t;
}

/// Strata of the compactified space with n boundary points of the given
/// codimension, sorted by their serialized form.
inline std::vector<Stratum> enumerate_strata(int n, int codim) {
  detail::check_n(n, 2);
  if (codim < 0 || codim > n - 2)
    throw InputError("codimension must lie in 0.." + std::to_string(n - 2));
  std::vector<Stratum> out;
  for (auto& t : detail::all_trees(n))
    if (t.codimension() == codim) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(),
            [](const Stratum& a, const Stratum& b) { return to_string(a) < to_string(b); });
  return out;
}

/// Dimension of the open cell: an open (n-2)-simplex.
inline int dim(int n) {
  detail::check_n(n, 2);
  return n - 2;
}

/// m_outer o_position m_inner, position 1-based.
struct Facet {
  Stratum stratum;
  int outer;
  int inner;
  int position;
};

inline std::string composition_label(const Facet& f) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string pos;
  for (char c : std::to_string(f.position)) pos += sub[c - '0'];
  return "m" + std::to_string(f.outer) + "∘" + pos + "m" + std::to_string(f.inner);
}

/// Codimension-one strata as compositions; ordered by inner arity, then position.
inline std::vector<Facet> facet_compositions(int n) {
  detail::check_n(n, 3);
  std::vector<Facet> out;
  for (int inner = n - 1; inner >= 2; --inner) {
    int outer = n - inner + 1;
    for (int pos = 1; pos <= outer; ++pos) {
      Stratum t = corolla(outer);
      t.children[pos - 1] = corolla(inner);
      out.push_back({std::move(t), outer, inner, pos});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Facet& a, const Facet& b) { return a.outer < b.outer; });
  return out;
}

/// Every tree obtained by contracting one internal edge.
inline std::vector<Stratum> contractions(const Stratum& t) {
  std::vector<Stratum> out;
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    const Stratum& c = t.children[k];
    if (c.is_leaf()) continue;
    Stratum merged;
    for (std::size_t m = 0; m < t.children.size(); ++m) {
      if (m == k)
        merged.children.insert(merged.children.end(), c.children.begin(), c.children.end());
      else
        merged.children.push_back(t.children[m]);
    }
    out.push_back(std::move(merged));
    for (auto& inner : contractions(c)) {
      Stratum r = t;
      r.children[k] = std::move(inner);
      out.push_back(std::move(r));
    }
  }
  return out;
}

/// Alternating face count sum_c (-1)^{(n-2)-c} #strata(n, c).
inline long euler_characteristic(int n) {
  long chi = 0;
  for (int c = 0; c <= n - 2; ++c) {
    long count = static_cast<long>(enumerate_strata(n, c).size());
    chi += ((n - 2 - c) % 2 ? -count : count);
  }
  return chi;
}

inline long catalan(int m) {
  long c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace dq
