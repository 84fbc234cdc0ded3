#include "gradedflip/windows.hpp"

namespace gradedflip {

std::pair<int, int> eta(const RingSpec& spec) {
  return {spec.weighting.eta_plus(), spec.weighting.eta_minus()};
}

WindowSpec window_generators(const RingSpec& spec, int w, Side side) {
  const int eta_side =
      side == Side::Plus ? spec.weighting.eta_plus() : spec.weighting.eta_minus();
  if (eta_side < 1) throw structural_error("window_generators: empty sign block");
  WindowSpec out;
  out.w = w;
  out.side = side;
  out.asserted_not_recomputed = !spec.is_polynomial_ring();
  for (int k = 0; k < eta_side; ++k)
    out.twists.push_back(side == Side::Plus ? w + k : -w - k);
  return out;
}

MembershipReport window_membership(const RingSpec& spec, int i, int w, int ilo, int ihi) {
  CechComplex plus(spec, Side::Plus, /*extended=*/true);
  // RGamma(A(-i))_w = RGamma(A)_{w-i}: shift the query range down by i and
  // the resulting top weight back up
  CohomologyTable t = cohomology_table(plus, ilo - i, ihi - i);
  MembershipReport rep;
  rep.generation_ok = i >= w;
  if (auto top = t.top_weight()) rep.top_weight = *top + i;
  rep.vanishing_ok = !rep.top_weight || *rep.top_weight < w;
  rep.member = rep.generation_ok && rep.vanishing_ok;
  return rep;
}

FunctorImage functor_image(const RingSpec& spec, int i) {
  spec.validate();
  const int eta_p = spec.weighting.eta_plus();
  if (eta_p < 1) throw structural_error("functor_image: empty positive block");
  if (i <= -eta_p)
    throw unsupported_error(
        "functor image of O(i) for i <= -eta+ involves an uncomputed cone");
  const std::size_t nv = spec.weighting.size();

  if (i <= 0) {
    // single free module A(i)
    FreeModule m;
    m.twists.push_back(-i);
    FreeComplex cx(0, {std::move(m)}, {}, spec.field, nv);
    return {i, std::move(cx), false, {}};
  }

  TaylorResolution taylor =
      taylor_resolution(truncate_generators(spec, i), spec.weighting, spec.field);
  FreeComplex koszul = koszul_complex(spec);
  FreeComplex total = FreeComplex::tensor(taylor.complex, koszul).twisted(i);
  return {i, std::move(total), false, std::move(taylor.gens_by_degree)};
}

}  // namespace gradedflip
