#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "gradedflip/error.hpp"
#include "gradedflip/weighting.hpp"

namespace gradedflip {

/// Exponent vector. Negative exponents are legal only inside localized
/// contexts (Cech multidegrees); polynomial arithmetic keeps them >= 0.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  int exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  long total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0L);
  }

  /// Z-weight: dot product with the weighting.
  int weight(const Weighting& w) const {
    if (w.size() != exps_.size())
      throw structural_error("monomial/weighting length mismatch");
    long s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      s += static_cast<long>(exps_[i]) * w.weight(i);
    return static_cast<int>(s);
  }

  Monomial operator*(const Monomial& o) const {
    check(o);
    Monomial m(exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    check(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// this / o, assuming o divides this.
  Monomial quotient(const Monomial& o) const {
    check(o);
    Monomial m(exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= o.exps_[i];
    return m;
  }

  Monomial lcm(const Monomial& o) const {
    check(o);
    Monomial m(exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      m.exps_[i] = std::max(exps_[i], o.exps_[i]);
    return m;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  /// Degrevlex on raw exponents: higher total degree wins; ties broken by
  /// the reverse lexicographic rule on the last differing variable.
  /// Returns <0, 0, >0 like strcmp; >0 means a > b in the order.
  static int compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size())
      throw structural_error("comparing monomials of different rings");
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = a.exps_.size(); k-- > 0;) {
      int d = a.exps_[k] - b.exps_[k];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }

  std::string str(const Weighting& w) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += w.name(i);
      if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

private:
  void check(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw structural_error("monomial length mismatch");
  }
  std::vector<int> exps_;
};

inline int weight_of_monomial(const Monomial& m, const Weighting& w) {
  return m.weight(w);
}

}  // namespace gradedflip
