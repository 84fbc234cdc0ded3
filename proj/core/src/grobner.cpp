#include "gradedflip/grobner.hpp"

#include <algorithm>

namespace gradedflip {

namespace {

/// One full division: remainder of f modulo basis, counting steps against
/// the budget.
GradedPolynomial reduce(const GradedPolynomial& f,
                        const std::vector<GradedPolynomial>& basis,
                        std::uint64_t& steps, std::uint64_t budget) {
  GradedPolynomial rem = GradedPolynomial::zero(f.field(), f.nvars());
  GradedPolynomial cur = f;
  while (!cur.is_zero()) {
    if (++steps > budget) throw budget_error("groebner step budget exceeded");
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(cur.leading_monomial())) {
        Monomial q = cur.leading_monomial().quotient(g.leading_monomial());
        Scalar c = cur.leading_coefficient() / g.leading_coefficient();
        cur = cur - g.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Term& lt = cur.terms().front();
      rem = rem + GradedPolynomial::from_term(cur.field(), lt.mono, lt.coeff);
      cur = cur - GradedPolynomial::from_term(cur.field(), lt.mono, lt.coeff);
    }
  }
  return rem;
}

GradedPolynomial s_polynomial(const GradedPolynomial& f, const GradedPolynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Monomial qf = l.quotient(f.leading_monomial());
  Monomial qg = l.quotient(g.leading_monomial());
  return f.times_term(qf, g.leading_coefficient()) -
         g.times_term(qg, f.leading_coefficient());
}

struct Pair {
  std::size_t i, j;
  long lcm_degree;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : basis_)
    if (!g.is_zero() && g.leading_monomial().is_one()) return true;
  return false;
}

GroebnerBasis buchberger(const std::vector<GradedPolynomial>& generators,
                         const GroebnerOptions& opts) {
  if (generators.empty()) throw structural_error("buchberger: no generators");
  Field f = generators.front().field();
  std::size_t nvars = generators.front().nvars();
  if (nvars == 0) throw structural_error("buchberger: empty variable set");
  for (const auto& g : generators) {
    if (g.field() != f || g.nvars() != nvars)
      throw structural_error("buchberger: generators from different rings");
    if (g.is_zero()) throw structural_error("buchberger: zero generator");
  }

  std::uint64_t steps = 0;
  std::vector<GradedPolynomial> basis;
  std::vector<Pair> pairs;
  auto add_element = [&](const GradedPolynomial& g) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Monomial l = basis[i].leading_monomial().lcm(g.leading_monomial());
      pairs.push_back({i, basis.size(), l.total_degree()});
    }
    basis.push_back(g);
  };
  for (const auto& g : generators) add_element(g.monic());

  while (!pairs.empty()) {
    // normal strategy: minimal lcm degree, deterministic tie-break
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *it;
    pairs.erase(it);

    const Monomial& li = basis[p.i].leading_monomial();
    const Monomial& lj = basis[p.j].leading_monomial();
    // product criterion: coprime leading monomials
    if (li.lcm(lj) == li * lj) continue;

    GradedPolynomial rem =
        reduce(s_polynomial(basis[p.i], basis[p.j]), basis, steps, opts.step_budget);
    if (!rem.is_zero()) add_element(rem.monic());
  }

  // auto-reduce: drop elements whose leading term another divides, then
  // fully reduce each against the rest
  std::vector<GradedPolynomial> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
      // keep the earliest element among equal leading monomials
      if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<GradedPolynomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce(reduced[i], others, steps, opts.step_budget).monic();
  }
  std::erase_if(reduced, [](const GradedPolynomial& g) { return g.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return Monomial::compare_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  GroebnerBasis gb(f, nvars);
  gb.basis_ = std::move(reduced);
  gb.source_ = generators;
  return gb;
}

GradedPolynomial normal_form(const GradedPolynomial& f, const GroebnerBasis& gb) {
  if (f.field() != gb.field() || f.nvars() != gb.nvars())
    throw structural_error("normal_form: ring mismatch");
  std::uint64_t steps = 0;
  return reduce(f, gb.elements(), steps, UINT64_MAX);
}

std::optional<long> krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return std::nullopt;
  const std::size_t n = gb.nvars();
  if (n > 24) throw unsupported_error("krull_dimension: too many variables");
  // leading-monomial supports as bitmasks
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements()) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.leading_monomial().exponent(v) > 0) mask |= 1u << v;
    supports.push_back(mask);
  }
  long best = 0;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    bool independent = true;
    for (std::uint32_t m : supports) {
      if ((m & ~sub) == 0) {  // support contained in the subset
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<long>(__builtin_popcount(sub)));
  }
  return best;
}

}  // namespace gradedflip
