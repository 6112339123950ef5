#pragma once

#include <algorithm>
#include <vector>

#include "dq/wick.hpp"

namespace dq::oracle {

/// One factor of an ordered word: xi^index (even) or eta_index (odd).
struct Factor {
  bool odd;
  int index;
};

/// Gaussian expectation of an ordered word by exhaustive enumeration of the
/// bijections between its xi factors and its eta factors. Each matching is
/// weighted by prod delta, kappa per pair, and the sign of rearranging the
/// word into adjacent (xi eta) pairs.
inline HbarPoly word_expectation(const std::vector<Factor>& word, const HbarMonomial& kappa,
                                 int truncation) {
  std::vector<int> xs, es;
  for (int p = 0; p < static_cast<int>(word.size()); ++p) (word[p].odd ? es : xs).push_back(p);
  HbarPoly total(truncation);
  if (xs.size() != es.size()) return total;
  std::vector<int> perm(es.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < xs.size() && ok; ++k) ok = word[xs[k]].index == word[es[perm[k]]].index;
    if (!ok) continue;
    // target order of positions: x0 e_perm0 x1 e_perm1 ...; sign counts odd-odd inversions
    std::vector<int> order;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      order.push_back(xs[k]);
      order.push_back(es[perm[k]]);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        if (order[a] > order[b] && word[order[a]].odd && word[order[b]].odd) ++inversions;
    HbarPoly term = kappa.pow(static_cast<int>(xs.size())).to_poly(truncation);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Dissections of a convex N-gon with k diagonals (Kirkman-Cayley), i.e.
/// planar trees with N-1 leaves and k non-root internal vertices.
inline long kirkman_cayley(int polygon, int k) {
  auto binom = [](long n, long r) {
    if (r < 0 || r > n) return 0L;
    long b = 1;
    for (long t = 1; t <= r; ++t) b = b * (n - r + t) / t;
    return b;
  };
  return binom(polygon - 3, k) * binom(polygon + k - 1, k) / (k + 1);
}

}  // namespace dq::oracle
