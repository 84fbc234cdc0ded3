#pragma once

#include <string>
#include <vector>

#include "gradedflip/field.hpp"
#include "gradedflip/monomial.hpp"
#include "gradedflip/weighting.hpp"

namespace gradedflip {

/// Weight classification of a polynomial under a given weighting.
/// The zero polynomial is homogeneous of every weight (distinguished case).
struct WeightClass {
  enum class Kind { ZeroPolynomial, Homogeneous, Inhomogeneous };
  Kind kind = Kind::ZeroPolynomial;
  int weight = 0;  // meaningful only when kind == Homogeneous

  bool is_homogeneous() const { return kind != Kind::Inhomogeneous; }
  /// Compatible with a required weight (the zero polynomial matches any).
  bool has_weight(int w) const {
    return kind == Kind::ZeroPolynomial ||
           (kind == Kind::Homogeneous && weight == w);
  }
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial, terms kept in descending degrevlex order.
class GradedPolynomial {
public:
  static GradedPolynomial zero(Field f, std::size_t nvars) {
    return GradedPolynomial(f, nvars);
  }
  static GradedPolynomial constant(Field f, std::size_t nvars, long c) {
    GradedPolynomial p(f, nvars);
    Scalar s = Scalar::from_int(f, c);
    if (!s.is_zero()) p.terms_.push_back({Monomial(nvars), s});
    return p;
  }
  static GradedPolynomial from_term(Field f, const Monomial& m, const Scalar& c) {
    GradedPolynomial p(f, m.nvars());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// x_i as a polynomial.
  static GradedPolynomial variable(Field f, std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return from_term(f, Monomial(std::move(e)), Scalar::one(f));
  }

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    require_nonzero();
    return terms_.front().mono;
  }
  const Scalar& leading_coefficient() const {
    require_nonzero();
    return terms_.front().coeff;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  GradedPolynomial operator+(const GradedPolynomial& o) const {
    check(o);
    GradedPolynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = Monomial::compare_degrevlex(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        out.terms_.push_back(o.terms_[j++]);
      } else {
        Scalar s = terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
  }
  GradedPolynomial operator-(const GradedPolynomial& o) const { return *this + (-o); }

  GradedPolynomial operator*(const GradedPolynomial& o) const {
    check(o);
    GradedPolynomial out(field_, nvars_);
    for (const auto& t : o.terms_) out = out + this->times_term(t.mono, t.coeff);
    return out;
  }

  GradedPolynomial times_term(const Monomial& m, const Scalar& c) const {
    GradedPolynomial out(field_, nvars_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Scalar s = t.coeff * c;
      if (!s.is_zero()) out.terms_.push_back({t.mono * m, s});
    }
    return out;  // multiplication by a monomial preserves degrevlex order
  }

  GradedPolynomial times_scalar(const Scalar& c) const {
    return times_term(Monomial(nvars_), c);
  }

  GradedPolynomial pow(unsigned n) const {
    GradedPolynomial out = constant(field_, nvars_, 1);
    for (unsigned k = 0; k < n; ++k) out = out * *this;
    return out;
  }

  /// Monic rescaling (leading coefficient 1). Zero stays zero.
  GradedPolynomial monic() const {
    if (is_zero()) return *this;
    return times_scalar(leading_coefficient().inverse());
  }

  WeightClass homogeneity(const Weighting& w) const {
    WeightClass out;
    if (terms_.empty()) return out;  // zero: every weight
    out.kind = WeightClass::Kind::Homogeneous;
    out.weight = terms_.front().mono.weight(w);
    for (const auto& t : terms_) {
      if (t.mono.weight(w) != out.weight) {
        out.kind = WeightClass::Kind::Inhomogeneous;
        return out;
      }
    }
    return out;
  }

  bool operator==(const GradedPolynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

  std::string str(const Weighting& w) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      std::string c = t.coeff.str();
      bool neg = !c.empty() && c[0] == '-';
      if (i == 0) {
        if (neg) out += "-", c = c.substr(1);
      } else {
        out += neg ? " - " : " + ";
        if (neg) c = c.substr(1);
      }
      if (t.mono.is_one()) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += t.mono.str(w);
      }
    }
    return out;
  }

private:
  GradedPolynomial(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  void check(const GradedPolynomial& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_)
      throw structural_error("polynomials from different rings");
  }
  void require_nonzero() const {
    if (terms_.empty()) throw structural_error("zero polynomial has no leading term");
  }

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace gradedflip
