#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedflip/field.hpp"
#include "gradedflip/polynomial.hpp"
#include "gradedflip/weighting.hpp"

namespace gradedflip {

enum class BirationalKind { Flip, Flop, Unspecified };

/// Parameters of the Brown-Reid 3-fold flip family.
struct BrownReidParams {
  long lambda = 1, mu = 1, d = 1, e = 1, alpha = 1, beta = 1;
};

/// A parsed and validated ring description: weighted variables over an exact
/// field, optional homogeneous relations, and flip/flop metadata.
struct RingSpec {
  Field field = Field::rationals();
  Weighting weighting;
  std::vector<GradedPolynomial> relations;
  BirationalKind kind = BirationalKind::Unspecified;
  std::optional<BrownReidParams> template_params;

  std::size_t p() const { return weighting.positive_count(); }
  std::size_t q() const { return weighting.negative_count(); }
  std::size_t r() const { return weighting.zero_count(); }
  std::size_t s() const { return relations.size(); }
  bool is_polynomial_ring() const { return relations.empty(); }

  /// Throws structural_error on any violated invariant (inhomogeneous
  /// relation, gcd violation for the Brown-Reid template, ...).
  void validate() const;
};

/// eta^+/eta^- and the integer a of the flip/flop structure. a is absent when
/// the ring has relations and no declared kind (never inferred from algebra).
struct FlipInvariants {
  int eta_plus = 0;
  int eta_minus = 0;
  std::optional<int> a;
};

RingSpec parse_ring_spec(const std::string& text);
std::string serialize(const RingSpec& spec);

/// Parse a polynomial expression (+, -, *, ^, integer coefficients,
/// parentheses) in the variables of the weighting.
GradedPolynomial parse_polynomial(const std::string& text, const Weighting& w, Field f);

/// Expand the Brown-Reid family at concrete parameters: 6 variables
/// x1, x2, y1, y2, y3, z and the two relations, declared as a flip.
RingSpec brown_reid_ring(const BrownReidParams& params,
                         Field field = Field::rationals());

FlipInvariants flip_invariants(const RingSpec& spec);

/// FNV-1a content digest of the normalized spec text (CRLF stripped,
/// trailing whitespace trimmed). Hex string.
std::string spec_digest(const std::string& text);

}  // namespace gradedflip
