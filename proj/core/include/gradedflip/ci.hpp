#pragma once

#include <string>

#include "gradedflip/grobner.hpp"
#include "gradedflip/ring_spec.hpp"

namespace gradedflip {

enum class Verdict { Pass, Fail, Undetermined, NotApplicable };

std::string verdict_name(Verdict v);

/// Complete-intersection hypothesis report.
///   (i)   every relation degree <= 0
///   (ii)  dim(A) = p + q + r - s
///   (iii) dim(A/I+) = q + r - s           (level 2 only)
struct CiReport {
  int level = 1;
  Verdict degrees = Verdict::Undetermined;
  Verdict dimension = Verdict::Undetermined;
  Verdict quotient_dimension = Verdict::NotApplicable;
  long dim_a = 0;               // valid when dimension != Undetermined
  long expected_dim_a = 0;      // p + q + r - s
  long dim_quotient = 0;        // valid when quotient_dimension is Pass/Fail
  long expected_dim_quotient = 0;  // q + r - s
  std::vector<int> relation_degrees;
  std::string diagnostic;

  bool passed() const {
    return degrees == Verdict::Pass && dimension == Verdict::Pass &&
           (quotient_dimension == Verdict::Pass ||
            quotient_dimension == Verdict::NotApplicable);
  }
};

CiReport validate_ci_assumptions(const RingSpec& spec, int level,
                                 const GroebnerOptions& opts = {});

}  // namespace gradedflip
