#include "gradedflip/report.hpp"

#include <algorithm>

#include "gradedflip/version.hpp"

namespace gradedflip {

std::pair<int, int> default_weight_range(const RingSpec& spec) {
  int m = std::max(8, spec.weighting.eta_plus() + spec.weighting.eta_minus() + 2);
  return {-m, m};
}

Json table_to_json(const CohomologyTable& table, Side side) {
  Json out;
  out["side"] = side_name(side);
  Json weights = Json::array();
  for (const auto& [key, dim] : table.entries()) {
    Json e;
    e["h"] = key.first;
    e["i"] = key.second;
    e["dim"] = dim;
    weights.push_back(std::move(e));
  }
  out["weights"] = std::move(weights);
  out["complete"] = table.complete();
  return out;
}

Json ci_to_json(const CiReport& rep) {
  Json out;
  out["level"] = rep.level;
  out["relation_degrees"] = rep.relation_degrees;
  out["degrees_nonpositive"] = verdict_name(rep.degrees);
  out["dimension"] = verdict_name(rep.dimension);
  out["dim_A"] = rep.dim_a;
  out["expected_dim_A"] = rep.expected_dim_a;
  if (rep.level >= 2) {
    out["quotient_dimension"] = verdict_name(rep.quotient_dimension);
    out["dim_A_mod_Iplus"] = rep.dim_quotient;
    out["expected_dim_A_mod_Iplus"] = rep.expected_dim_quotient;
  }
  if (!rep.diagnostic.empty()) out["diagnostic"] = rep.diagnostic;
  out["pass"] = rep.passed();
  return out;
}

Json complex_to_json(const FreeComplex& cx, const Weighting& w) {
  Json out;
  Json degrees = Json::array();
  for (int d = cx.lo(); d <= cx.hi(); ++d) {
    Json deg;
    deg["degree"] = d;
    deg["rank"] = cx.module(d).rank();
    deg["twists"] = cx.module(d).twists;
    degrees.push_back(std::move(deg));
  }
  out["modules"] = std::move(degrees);
  Json diffs = Json::array();
  for (int d = cx.lo(); d < cx.hi(); ++d) {
    const PolyMatrix& m = cx.diff(d);
    Json jm;
    jm["from_degree"] = d;
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str(w));
      rows.push_back(std::move(row));
    }
    jm["entries"] = std::move(rows);
    diffs.push_back(std::move(jm));
  }
  out["differentials"] = std::move(diffs);
  return out;
}

Json run_suite(const RingSpec& spec, const std::string& spec_text,
               const SuiteOptions& opts) {
  Json out;
  out["schema"] = kJsonSchema;
  out["tool_version"] = kVersion;
  out["command"] = "suite";
  out["input_digest"] = spec_digest(spec_text);

  auto [dlo, dhi] = default_weight_range(spec);
  const int ilo = (opts.ilo == 0 && opts.ihi == 0) ? dlo : opts.ilo;
  const int ihi = (opts.ilo == 0 && opts.ihi == 0) ? dhi : opts.ihi;
  out["weight_range"] = {ilo, ihi};

  bool all_pass = true;
  GroebnerOptions gopts{opts.step_budget};

  // validation
  spec.validate();
  out["validate"] = "pass";

  // eta / a
  FlipInvariants inv = flip_invariants(spec);
  out["eta_plus"] = inv.eta_plus;
  out["eta_minus"] = inv.eta_minus;
  if (inv.a)
    out["a"] = *inv.a;
  else
    out["a"] = nullptr;

  // CI checks + non-positive presentation (quotient rings)
  if (!spec.is_polynomial_ring()) {
    CiReport ci = validate_ci_assumptions(spec, 2, gopts);
    out["ci"] = ci_to_json(ci);
    all_pass = all_pass && ci.passed();
    if (ci.dimension == Verdict::Pass) {
      NonpositiveReport np = nonpositive_presentation_check(spec, ci);
      Json jn;
      jn["pass"] = np.pass;
      Json tor = Json::array();
      for (const auto& [deg, weights] : np.tor_weights.by_degree) {
        Json e;
        e["degree"] = deg;
        e["weights"] = weights;
        tor.push_back(std::move(e));
      }
      jn["tor_weights"] = std::move(tor);
      out["nonpositive_presentation"] = std::move(jn);
      all_pass = all_pass && np.pass;
    }
  } else {
    out["ci"] = "not applicable (polynomial ring)";
  }

  // cohomology, vanishing, duality (polynomial rings without z-block)
  if (spec.is_polynomial_ring() && spec.r() == 0 && spec.p() > 0 && spec.q() > 0 &&
      inv.a) {
    CechComplex plus(spec, Side::Plus, true);
    CechComplex minus(spec, Side::Minus, true);
    CohomologyTable tp = cohomology_table(plus, ilo, ihi);
    CohomologyTable tm = cohomology_table(minus, ilo, ihi);
    out["cohomology_plus"] = table_to_json(tp, Side::Plus);
    out["cohomology_minus"] = table_to_json(tm, Side::Minus);

    // oracle agreement
    bool oracle_ok = tp == closed_form_table(spec, Side::Plus, ilo, ihi) &&
                     tm == closed_form_table(spec, Side::Minus, ilo, ihi);
    out["closed_form_agreement"] = oracle_ok;
    all_pass = all_pass && oracle_ok;

    VanishingReport van = canonical_vanishing_check(spec, *inv.a, ilo, ihi);
    Json jv;
    jv["a"] = van.a;
    jv["pass"] = van.pass;
    if (van.plus_top_weight) jv["plus_top_weight"] = *van.plus_top_weight;
    if (van.minus_bottom_weight) jv["minus_bottom_weight"] = *van.minus_bottom_weight;
    out["vanishing"] = std::move(jv);
    all_pass = all_pass && van.pass;

    DualityReport dual = duality_check(spec, *inv.a, ilo, ihi);
    Json jd;
    jd["a"] = dual.a;
    jd["n"] = dual.n;
    jd["pass"] = dual.pass;
    jd["discrepancies"] = Json::array();
    for (const auto& disc : dual.discrepancies) {
      Json e;
      e["h"] = disc.h;
      e["i"] = disc.i;
      e["lhs"] = disc.lhs;
      e["rhs"] = disc.rhs;
      jd["discrepancies"].push_back(std::move(e));
    }
    out["duality"] = std::move(jd);
    all_pass = all_pass && dual.pass;
  } else {
    out["cohomology"] = spec.is_polynomial_ring()
                            ? "not applicable (degenerate block or zero weights)"
                            : "not applicable (quotient ring)";
  }

  // window generators
  if (spec.weighting.eta_plus() >= 1) {
    WindowSpec win = window_generators(spec, 0, Side::Plus);
    Json jw;
    jw["w"] = win.w;
    jw["side"] = side_name(win.side);
    jw["twists"] = win.twists;
    jw["asserted_not_recomputed"] = win.asserted_not_recomputed;
    out["window_plus"] = std::move(jw);
  }

  // functor images
  Json images = Json::array();
  for (int i : opts.functor_twists) {
    if (i <= -spec.weighting.eta_plus() || spec.weighting.eta_plus() < 1) continue;
    FunctorImage img = functor_image(spec, i);
    Json ji;
    ji["twist"] = i;
    ji["ranks"] = Json::array();
    for (int d = img.presentation.lo(); d <= img.presentation.hi(); ++d)
      ji["ranks"].push_back(img.presentation.module(d).rank());
    ji["lo"] = img.presentation.lo();
    images.push_back(std::move(ji));
  }
  out["functor_images"] = std::move(images);

  out["pass"] = all_pass;
  return out;
}

}  // namespace gradedflip
