#include "gradedflip/ci.hpp"

namespace gradedflip {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undetermined: return "undetermined";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

CiReport validate_ci_assumptions(const RingSpec& spec, int level,
                                 const GroebnerOptions& opts) {
  if (level != 1 && level != 2) throw structural_error("ci level must be 1 or 2");
  spec.validate();

  CiReport rep;
  rep.level = level;
  const long p = static_cast<long>(spec.p());
  const long q = static_cast<long>(spec.q());
  const long r = static_cast<long>(spec.r());
  const long s = static_cast<long>(spec.s());
  rep.expected_dim_a = p + q + r - s;
  rep.expected_dim_quotient = q + r - s;

  // (i) relation degrees <= 0
  rep.degrees = Verdict::Pass;
  for (const auto& rel : spec.relations) {
    WeightClass wc = rel.homogeneity(spec.weighting);
    int deg = wc.kind == WeightClass::Kind::Homogeneous ? wc.weight : 0;
    rep.relation_degrees.push_back(deg);
    if (deg > 0) rep.degrees = Verdict::Fail;
  }

  // (ii) dim(A) = p + q + r - s, by Groebner + independent sets
  if (spec.is_polynomial_ring()) {
    rep.dim_a = p + q + r;
    rep.dimension = Verdict::Pass;  // vacuous: s = 0
  } else {
    try {
      GroebnerBasis gb = buchberger(spec.relations, opts);
      auto dim = krull_dimension(gb);
      if (!dim) {
        rep.dim_a = -1;
        rep.dimension = Verdict::Fail;
        rep.diagnostic = "relation ideal is the unit ideal";
      } else {
        rep.dim_a = *dim;
        rep.dimension = rep.dim_a == rep.expected_dim_a ? Verdict::Pass : Verdict::Fail;
      }
    } catch (const budget_error& e) {
      rep.dimension = Verdict::Undetermined;
      rep.diagnostic = e.what();
      return rep;
    }
  }

  // (iii) dim(A/I+) = q + r - s
  if (level == 2) {
    auto positive = spec.weighting.block(1);
    if (positive.empty()) {
      rep.quotient_dimension = rep.dim_a == rep.expected_dim_quotient + p
                                   ? Verdict::Pass
                                   : Verdict::Fail;
      rep.dim_quotient = rep.dim_a;
    } else {
      std::vector<GradedPolynomial> gens = spec.relations;
      for (std::size_t v : positive)
        gens.push_back(GradedPolynomial::variable(spec.field, spec.weighting.size(), v));
      try {
        GroebnerBasis gb = buchberger(gens, opts);
        auto dim = krull_dimension(gb);
        if (!dim) {
          rep.dim_quotient = -1;
          rep.quotient_dimension = Verdict::Fail;
          rep.diagnostic = "I+ together with the relations is the unit ideal";
        } else {
          rep.dim_quotient = *dim;
          rep.quotient_dimension =
              rep.dim_quotient == rep.expected_dim_quotient ? Verdict::Pass : Verdict::Fail;
        }
      } catch (const budget_error& e) {
        rep.quotient_dimension = Verdict::Undetermined;
        rep.diagnostic = e.what();
      }
    }
  }
  return rep;
}

}  // namespace gradedflip
