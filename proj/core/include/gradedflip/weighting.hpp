#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradedflip/error.hpp"

namespace gradedflip {

/// Variable names with their integer Z-weights. Weight sign alone decides
/// block membership: positive -> x-block, negative -> y-block, zero -> z-block.
class Weighting {
public:
  Weighting() = default;
  Weighting(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
      throw structural_error("weighting: name/weight count mismatch");
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw structural_error("weighting: empty variable name");
      if (!seen.insert(n).second)
        throw structural_error("weighting: duplicate variable '" + n + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// Indices of variables whose weight has the given sign (-1, 0, +1),
  /// in declaration order.
  std::vector<std::size_t> block(int sign) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      int s = weights_[i] > 0 ? 1 : (weights_[i] < 0 ? -1 : 0);
      if (s == sign) out.push_back(i);
    }
    return out;
  }

  std::size_t positive_count() const { return block(1).size(); }
  std::size_t negative_count() const { return block(-1).size(); }
  std::size_t zero_count() const { return block(0).size(); }

  /// Sum of the positive weights.
  int eta_plus() const {
    int s = 0;
    for (int w : weights_)
      if (w > 0) s += w;
    return s;
  }
  /// Minus the sum of the negative weights.
  int eta_minus() const {
    int s = 0;
    for (int w : weights_)
      if (w < 0) s -= w;
    return s;
  }

  bool operator==(const Weighting& o) const {
    return names_ == o.names_ && weights_ == o.weights_;
  }

private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

}  // namespace gradedflip
