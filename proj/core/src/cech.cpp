#include "gradedflip/cech.hpp"

#include <algorithm>
#include <cstdlib>

#include "gradedflip/enumerate.hpp"
#include "gradedflip/linalg.hpp"

namespace gradedflip {

namespace {

Weighting sub_weighting(const Weighting& w, const std::vector<std::size_t>& vars) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t v : vars) {
    names.push_back(w.name(v));
    weights.push_back(w.weight(v));
  }
  return Weighting(std::move(names), std::move(weights));
}

void require_cohomology_supported(const RingSpec& spec) {
  if (!spec.is_polynomial_ring())
    throw unsupported_error(
        "exact local cohomology is only available for polynomial rings "
        "(quotient relations are not multigraded)");
  if (spec.weighting.zero_count() > 0)
    throw unsupported_error(
        "weight pieces are not finite-dimensional over the field when a "
        "zero-weight variable is present");
}

}  // namespace

CechComplex::CechComplex(const RingSpec& spec, Side side, bool extended)
    : side_(side), extended_(extended), field_(spec.field), weighting_(spec.weighting) {
  if (!spec.is_polynomial_ring())
    throw unsupported_error("Cech complexes are built over polynomial rings only");
  inverting_ = weighting_.block(side == Side::Plus ? 1 : -1);
}

void CechComplex::set_inverting_order(std::vector<std::size_t> order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected = inverting_;
  std::sort(expected.begin(), expected.end());
  if (sorted != expected)
    throw structural_error("inverting order must be a permutation of the sign block");
  inverting_ = std::move(order);
}

int CechComplex::top_degree() const {
  int r = static_cast<int>(inverting_.size());
  return extended_ ? r : r - 1;
}

bool CechComplex::subset_member(const Monomial& d, unsigned sigma) const {
  for (std::size_t v = 0; v < weighting_.size(); ++v) {
    if (d.exponent(v) >= 0) continue;
    bool inverted = false;
    for (std::size_t j = 0; j < inverting_.size(); ++j)
      if (inverting_[j] == v && (sigma >> j) & 1u) {
        inverted = true;
        break;
      }
    if (!inverted) return false;
  }
  return true;
}

std::vector<long> CechComplex::term_dimensions(const Monomial& d) const {
  const int top = top_degree();
  std::vector<long> dims(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  const unsigned r = static_cast<unsigned>(inverting_.size());
  for (unsigned sigma = 0; sigma < (1u << r); ++sigma) {
    int size = __builtin_popcount(sigma);
    int deg = extended_ ? size : size - 1;
    if (deg < 0) continue;  // plain Cech has no empty-subset term
    if (subset_member(d, sigma)) ++dims[static_cast<std::size_t>(deg)];
  }
  return dims;
}

std::vector<long> CechComplex::multidegree_cohomology(const Monomial& d) const {
  if (d.nvars() != weighting_.size())
    throw structural_error("multidegree length mismatch");
  const int top = top_degree();
  if (top < 0) return {};
  const unsigned r = static_cast<unsigned>(inverting_.size());

  // terms present at this multidegree, grouped by homological degree
  std::vector<std::vector<unsigned>> terms(static_cast<std::size_t>(top + 1));
  for (unsigned sigma = 0; sigma < (1u << r); ++sigma) {
    int size = __builtin_popcount(sigma);
    int deg = extended_ ? size : size - 1;
    if (deg < 0) continue;
    if (subset_member(d, sigma)) terms[static_cast<std::size_t>(deg)].push_back(sigma);
  }

  // signed incidence matrices over the field; rank via exact elimination
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top), 0);
  for (int h = 0; h < top; ++h) {
    const auto& src = terms[static_cast<std::size_t>(h)];
    const auto& tgt = terms[static_cast<std::size_t>(h + 1)];
    if (src.empty() || tgt.empty()) continue;
    std::vector<std::vector<Scalar>> m(
        tgt.size(), std::vector<Scalar>(src.size(), Scalar::zero(field_)));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t rI = 0; rI < tgt.size(); ++rI) {
        unsigned sigma = src[c], tau = tgt[rI];
        if ((sigma & tau) != sigma || __builtin_popcount(tau ^ sigma) != 1) continue;
        unsigned added = tau ^ sigma;
        int pos = __builtin_popcount(tau & (added - 1));  // bits below the new one
        m[rI][c] = pos % 2 == 0 ? Scalar::one(field_) : -Scalar::one(field_);
      }
    ranks[static_cast<std::size_t>(h)] = matrix_rank(std::move(m));
  }

  std::vector<long> dims(static_cast<std::size_t>(top + 1), 0);
  for (int h = 0; h <= top; ++h) {
    long n = static_cast<long>(terms[static_cast<std::size_t>(h)].size());
    long rout = h < top ? static_cast<long>(ranks[static_cast<std::size_t>(h)]) : 0;
    long rin = h > 0 ? static_cast<long>(ranks[static_cast<std::size_t>(h - 1)]) : 0;
    dims[static_cast<std::size_t>(h)] = n - rout - rin;
  }
  return dims;
}

std::optional<int> CohomologyTable::top_weight() const {
  std::optional<int> out;
  for (const auto& [key, dim] : entries_)
    if (dim != 0 && (!out || key.second > *out)) out = key.second;
  return out;
}

std::optional<int> CohomologyTable::bottom_weight() const {
  std::optional<int> out;
  for (const auto& [key, dim] : entries_)
    if (dim != 0 && (!out || key.second < *out)) out = key.second;
  return out;
}

CohomologyTable cohomology_table(const CechComplex& cx, int ilo, int ihi) {
  if (ilo > ihi) throw structural_error("empty weight range");
  if (!cx.extended())
    throw unsupported_error(
        "weightwise tables are computed for the extended complex (the plain "
        "Cech complex has infinite-dimensional weight pieces)");
  const Weighting& w = cx.weighting();
  if (w.zero_count() > 0)
    throw unsupported_error(
        "weight pieces are not finite-dimensional over the field when a "
        "zero-weight variable is present");

  const auto& inv = cx.inverting();
  std::vector<bool> inverted(w.size(), false);
  for (std::size_t v : inv) inverted[v] = true;

  CohomologyTable table;
  table.set_weight_range(ilo, ihi);
  for (int i = ilo; i <= ihi; ++i) {
    // support bound: inverted exponents <= -1, all others >= 0; every
    // contribution then has one sign, so |d_v| <= |i| / |w_v|
    std::vector<int> lo(w.size()), hi(w.size());
    long bound = std::abs(static_cast<long>(i));
    for (std::size_t v = 0; v < w.size(); ++v) {
      long cap = bound / std::abs(w.weight(v));
      if (inverted[v]) {
        lo[v] = static_cast<int>(-std::max(cap, 1L));
        hi[v] = -1;
      } else {
        lo[v] = 0;
        hi[v] = static_cast<int>(cap);
      }
    }
    for_each_in_box(w, lo, hi, i, [&](const Monomial& d) {
      auto dims = cx.multidegree_cohomology(d);
      for (std::size_t h = 0; h < dims.size(); ++h)
        table.add(static_cast<int>(h), i, dims[h]);
    });
  }
  table.set_complete(true);
  return table;
}

CohomologyTable closed_form_table(const RingSpec& spec, Side side, int ilo, int ihi) {
  require_cohomology_supported(spec);
  if (ilo > ihi) throw structural_error("empty weight range");
  const Weighting& w = spec.weighting;
  const auto xs = w.block(1);
  const auto ys = w.block(-1);
  Weighting wx = sub_weighting(w, xs);
  Weighting wy = sub_weighting(w, ys);
  const int eta_p = w.eta_plus();
  const int eta_m = w.eta_minus();

  auto count_x = [&](int weight) {
    if (xs.empty()) return weight == 0 ? 1L : 0L;
    return count_ring_monomials(wx, weight);
  };
  auto count_y = [&](int weight) {
    if (ys.empty()) return weight == 0 ? 1L : 0L;
    return count_ring_monomials(wy, weight);
  };

  CohomologyTable table;
  table.set_weight_range(ilo, ihi);
  if (side == Side::Plus) {
    // k[y] (x) k[x]^* (eta+) [-p], concentrated in degree p
    const int h = static_cast<int>(xs.size());
    for (int i = ilo; i <= ihi; ++i) {
      long dim = 0;
      for (int t = i + eta_p; t <= 0; ++t) dim += count_y(t) * count_x(t - i - eta_p);
      table.add(h, i, dim);
    }
  } else {
    // k[x] (x) k[y]^* (-eta-) [-q], concentrated in degree q
    const int h = static_cast<int>(ys.size());
    for (int i = ilo; i <= ihi; ++i) {
      long dim = 0;
      for (int v = 0; v <= i - eta_m; ++v) dim += count_x(v) * count_y(-(i - eta_m - v));
      table.add(h, i, dim);
    }
  }
  table.set_complete(true);
  return table;
}

VanishingReport canonical_vanishing_check(const RingSpec& spec, int a, int ilo, int ihi) {
  require_cohomology_supported(spec);
  CechComplex plus(spec, Side::Plus, /*extended=*/true);
  CechComplex minus(spec, Side::Minus, /*extended=*/true);
  CohomologyTable tp = cohomology_table(plus, ilo, ihi);
  CohomologyTable tm = cohomology_table(minus, ilo, ihi);

  VanishingReport rep;
  rep.a = a;
  rep.plus_top_weight = tp.top_weight();
  rep.minus_bottom_weight = tm.bottom_weight();
  rep.pass = true;
  if (rep.plus_top_weight && *rep.plus_top_weight >= a) rep.pass = false;
  if (rep.minus_bottom_weight && *rep.minus_bottom_weight <= a) rep.pass = false;
  return rep;
}

DualityReport duality_check(const RingSpec& spec, int a, int ilo, int ihi) {
  require_cohomology_supported(spec);
  const int p = static_cast<int>(spec.p());
  const int q = static_cast<int>(spec.q());
  if (p == 0 || q == 0)
    throw unsupported_error("duality check needs both sign blocks nonempty");
  DualityReport rep;
  rep.a = a;
  rep.n = p + q - 1;

  CechComplex plus(spec, Side::Plus, true);
  CechComplex minus(spec, Side::Minus, true);
  CohomologyTable tp = cohomology_table(plus, ilo + a, ihi + a);
  CohomologyTable tm = cohomology_table(minus, -ihi, -ilo);

  rep.pass = true;
  for (int i = ilo; i <= ihi; ++i) {
    for (int h = -1; h <= rep.n + 1; ++h) {
      long lhs = tp.dim(h + 1, i + a);
      long rhs = tm.dim(rep.n - h, -i);
      if (lhs != rhs) {
        rep.pass = false;
        rep.discrepancies.push_back({h, i, lhs, rhs});
      }
    }
  }
  return rep;
}

}  // namespace gradedflip
