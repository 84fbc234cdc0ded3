#pragma once

#include <functional>
#include <vector>

#include "gradedflip/monomial.hpp"
#include "gradedflip/weighting.hpp"

namespace gradedflip {

/// Visit every exponent vector in the box [lo_i, hi_i] with the given
/// Z-weight. Bounds must be finite (vectors of per-variable bounds).
inline void for_each_in_box(const Weighting& w, const std::vector<int>& lo,
                            const std::vector<int>& hi, int target,
                            const std::function<void(const Monomial&)>& fn) {
  const std::size_t n = w.size();
  if (lo.size() != n || hi.size() != n)
    throw structural_error("box bounds length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;  // empty box

  // per-variable min/max weight contribution of the remaining suffix
  std::vector<long> min_rest(n + 1, 0), max_rest(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    long wa = static_cast<long>(w.weight(i)) * lo[i];
    long wb = static_cast<long>(w.weight(i)) * hi[i];
    min_rest[i] = min_rest[i + 1] + std::min(wa, wb);
    max_rest[i] = max_rest[i + 1] + std::max(wa, wb);
  }

  std::vector<int> exps(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i == n) {
      if (remaining == 0) fn(Monomial(exps));
      return;
    }
    for (int e = lo[i]; e <= hi[i]; ++e) {
      long rem = remaining - static_cast<long>(e) * w.weight(i);
      if (rem < min_rest[i + 1] || rem > max_rest[i + 1]) continue;
      exps[i] = e;
      rec(i + 1, rem);
    }
    exps[i] = 0;
  };
  rec(0, target);
}

/// Number of lattice points in the box with the given Z-weight.
inline long count_monomials(const Weighting& w, int weight,
                            const std::vector<int>& lo, const std::vector<int>& hi) {
  long count = 0;
  for_each_in_box(w, lo, hi, weight, [&](const Monomial&) { ++count; });
  return count;
}

/// Count of monomials (all exponents >= 0) of a polynomial ring at the given
/// weight. Finite only when every weight is nonzero and the weights that do
/// appear all push in one direction per candidate; callers restrict to rings
/// with no zero-weight variables when sign-mixed.
inline long count_ring_monomials(const Weighting& w, int weight) {
  // Exponent of variable i is bounded by |weight| spread over same-sign
  // weights plus cancellation against the opposite sign -- not finite in
  // general. Callers here only use single-sign weightings, where the bound
  // |weight / w_i| holds.
  std::vector<int> lo(w.size(), 0), hi(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int wi = w.weight(i);
    if (wi == 0) throw structural_error("count_ring_monomials: zero weight");
    if ((wi > 0) != (weight > 0) && weight != 0) {
      hi[i] = 0;  // wrong sign cannot contribute
    } else {
      hi[i] = std::abs(weight) / std::abs(wi);
    }
  }
  if (weight == 0) return 1;  // only the trivial monomial in a single-sign block
  return count_monomials(w, weight, lo, hi);
}

}  // namespace gradedflip
