#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gradedflip/cech.hpp"
#include "gradedflip/ci.hpp"
#include "gradedflip/complexes.hpp"
#include "gradedflip/grobner.hpp"
#include "gradedflip/ring_spec.hpp"
#include "gradedflip/windows.hpp"

namespace gradedflip {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
  std::uint64_t step_budget = 1'000'000;
  /// Weight range; 0,0 means "use the default |i| <= max(8, eta+ + eta- + 2)".
  int ilo = 0, ihi = 0;
  /// Twists whose functor images are computed (those in (-eta+, ..] only).
  std::vector<int> functor_twists = {-1, 0, 1, 2};
};

/// Default weight window for a spec: |i| <= max(8, eta+ + eta- + 2).
std::pair<int, int> default_weight_range(const RingSpec& spec);

Json table_to_json(const CohomologyTable& table, Side side);
Json ci_to_json(const CiReport& rep);
Json complex_to_json(const FreeComplex& cx, const Weighting& w);

/// Run the full check suite: validation, CI checks, eta/a,
/// non-positive presentation, cohomology/vanishing/duality, window
/// generators, functor images. Deterministic JSON; "pass" aggregates every
/// applicable check.
Json run_suite(const RingSpec& spec, const std::string& spec_text,
               const SuiteOptions& opts = {});

}  // namespace gradedflip
