#pragma once

#include <map>
#include <vector>

#include "gradedflip/ci.hpp"
#include "gradedflip/polynomial.hpp"
#include "gradedflip/ring_spec.hpp"

namespace gradedflip {

/// Free graded module, recorded as generator twists: generator i spans
/// A(-t_i), so it sits in weight t_i.
struct FreeModule {
  std::vector<int> twists;
  std::size_t rank() const { return twists.size(); }
};

/// Dense matrix of polynomial entries. Rows index target generators,
/// columns index source generators.
class PolyMatrix {
public:
  PolyMatrix(std::size_t rows, std::size_t cols, Field f, std::size_t nvars)
      : rows_(rows), cols_(cols),
        e_(rows * cols, GradedPolynomial::zero(f, nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GradedPolynomial& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  GradedPolynomial& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  PolyMatrix multiply(const PolyMatrix& rhs) const;
  bool is_zero() const;
  PolyMatrix transposed() const;

private:
  std::size_t rows_, cols_;
  std::vector<GradedPolynomial> e_;
};

/// Bounded cochain complex of free graded modules; differential raises the
/// homological degree by one. d^2 = 0 is asserted at construction.
class FreeComplex {
public:
  /// modules[k] lives in degree lo+k; diffs[k] maps degree lo+k to lo+k+1.
  FreeComplex(int lo, std::vector<FreeModule> modules, std::vector<PolyMatrix> diffs,
              Field field, std::size_t nvars);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }

  const FreeModule& module(int degree) const;
  const PolyMatrix& diff(int degree) const;  // from degree to degree+1
  bool has_degree(int degree) const {
    return degree >= lo_ && degree <= hi();
  }

  /// All generator twists per degree, lo..hi.
  std::vector<std::pair<int, std::vector<int>>> twist_table() const;

  FreeComplex twisted(int n) const;   // M(n): every twist t -> t - n
  FreeComplex shifted(int n) const;   // M[n]: degree k -> k - n
  FreeComplex dualized() const;       // RHom(-, A) on free data

  /// Total complex of the tensor product (same ring).
  static FreeComplex tensor(const FreeComplex& a, const FreeComplex& b);

  /// Every differential entry must be homogeneous of weight
  /// (source twist) - (target twist). Throws otherwise.
  void check_homogeneous(const Weighting& w) const;

  /// Gaussian cancellation of differential entries that are nonzero
  /// constants; yields a homotopy-equivalent complex.
  FreeComplex minimized() const;

private:
  int lo_;
  Field field_;
  std::size_t nvars_;
  std::vector<FreeModule> modules_;
  std::vector<PolyMatrix> diffs_;
};

/// Koszul complex of the relation sequence, in degrees [-s, 0]; the degree 0
/// module is A itself (twist 0) and generator e_sigma has twist
/// sum of deg(f_i) over sigma.
FreeComplex koszul_complex(const RingSpec& spec);

/// Taylor complex of a monomial generating set, with the subset-lcm
/// multidegrees exposed (degree -|sigma| holds generator lcm(m_i : i in sigma)).
struct TaylorResolution {
  FreeComplex complex;
  /// gens_by_degree[k] lists the generator monomials of degree lo+k.
  std::vector<std::vector<Monomial>> gens_by_degree;
};
TaylorResolution taylor_resolution(const std::vector<Monomial>& gens,
                                   const Weighting& w, Field field);

/// Minimal monomial generating set of (C+)_{>= w} inside the positive-weight
/// variables. Returns {1} for w <= 0.
std::vector<Monomial> truncate_generators(const RingSpec& spec, int w);

/// Z-weights of the minimal generators of the Koszul resolution per
/// homological degree (the Tor weights in the complete-intersection case).
struct TorWeights {
  /// (homological degree, sorted weight multiset) pairs, ascending degree.
  std::vector<std::pair<int, std::vector<int>>> by_degree;
};

struct NonpositiveReport {
  bool pass = false;
  TorWeights tor_weights;
};

/// Non-positive-presentation criterion: all Koszul generator twists <= 0.
/// Refuses unless the complete-intersection report (level >= 1) passed,
/// since the Koszul twists are the Tor weights only for a regular sequence.
NonpositiveReport nonpositive_presentation_check(const RingSpec& spec,
                                                 const CiReport& ci);

}  // namespace gradedflip
