#pragma once

#include <optional>
#include <vector>

#include "gradedflip/cech.hpp"
#include "gradedflip/complexes.hpp"
#include "gradedflip/ring_spec.hpp"

namespace gradedflip {

/// Generator twists of the window subcategory at cutoff w.
struct WindowSpec {
  int w = 0;
  Side side = Side::Plus;
  /// Twist t stands for the generator A(-t).
  std::vector<int> twists;
  /// For quotient rings, split generation is asserted by hypothesis, not
  /// recomputed.
  bool asserted_not_recomputed = false;
};

WindowSpec window_generators(const RingSpec& spec, int w, Side side);

struct MembershipReport {
  bool member = false;
  bool generation_ok = false;  // i >= w
  bool vanishing_ok = false;   // top weight of RGamma_{I+}(A(-i)) < w
  std::optional<int> top_weight;
};

/// Window membership of A(-i) at cutoff w (polynomial rings; the table of
/// A(-i) is the A-table shifted by i).
MembershipReport window_membership(const RingSpec& spec, int i, int w, int ilo, int ihi);

std::pair<int, int> eta(const RingSpec& spec);

/// Free-complex presentation of the comparison functor's image of O(i)
/// (window cutoff w = 0; other windows by pre-twisting).
struct FunctorImage {
  int source_twist = 0;
  FreeComplex presentation;
  bool minimized = false;
  /// Multidegrees of the Taylor factor's generators (polynomial rings only;
  /// empty for the range -eta+ < i <= 0).
  std::vector<std::vector<Monomial>> taylor_generators;
};

FunctorImage functor_image(const RingSpec& spec, int i);

}  // namespace gradedflip
