#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradedflip/polynomial.hpp"

namespace gradedflip {

struct GroebnerOptions {
  /// Reduction-step budget; exceeding it raises budget_error, never a
  /// silently wrong answer.
  std::uint64_t step_budget = 1'000'000;
};

/// Reduced Groebner basis under degrevlex on raw exponents.
class GroebnerBasis {
public:
  const std::vector<GradedPolynomial>& elements() const { return basis_; }
  const std::vector<GradedPolynomial>& source_generators() const { return source_; }
  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  bool is_unit_ideal() const;

private:
  friend GroebnerBasis buchberger(const std::vector<GradedPolynomial>&,
                                  const GroebnerOptions&);
  GroebnerBasis(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  Field field_;
  std::size_t nvars_;
  std::vector<GradedPolynomial> basis_;
  std::vector<GradedPolynomial> source_;
};

/// Buchberger with the normal pair-selection strategy (minimal lcm degree,
/// ties by declaration order), followed by auto-reduction. Deterministic.
GroebnerBasis buchberger(const std::vector<GradedPolynomial>& generators,
                         const GroebnerOptions& opts = {});

/// Remainder of f on division by the basis; no term of the result is
/// divisible by a basis leading term.
GradedPolynomial normal_form(const GradedPolynomial& f, const GroebnerBasis& gb);

/// Krull dimension of the quotient ring: size of a maximum variable subset
/// independent modulo the leading-term ideal. nullopt encodes the unit ideal
/// (empty variety, dimension "-infinity").
std::optional<long> krull_dimension(const GroebnerBasis& gb);

}  // namespace gradedflip
