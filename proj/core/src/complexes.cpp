#include "gradedflip/complexes.hpp"

#include <algorithm>

#include "gradedflip/enumerate.hpp"

namespace gradedflip {

// --- PolyMatrix --------------------------------------------------------------

PolyMatrix PolyMatrix::multiply(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw structural_error("matrix shape mismatch");
  Field f = e_.empty() ? (rhs.e_.empty() ? Field::rationals() : rhs.e_[0].field())
                       : e_[0].field();
  std::size_t nv = e_.empty() ? (rhs.e_.empty() ? 0 : rhs.e_[0].nvars()) : e_[0].nvars();
  PolyMatrix out(rows_, rhs.cols_, f, nv);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      GradedPolynomial acc = GradedPolynomial::zero(f, nv);
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(r, k) * rhs.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const GradedPolynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transposed() const {
  Field f = e_.empty() ? Field::rationals() : e_[0].field();
  std::size_t nv = e_.empty() ? 0 : e_[0].nvars();
  PolyMatrix out(cols_, rows_, f, nv);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

// --- FreeComplex -------------------------------------------------------------

FreeComplex::FreeComplex(int lo, std::vector<FreeModule> modules,
                         std::vector<PolyMatrix> diffs, Field field, std::size_t nvars)
    : lo_(lo), field_(field), nvars_(nvars),
      modules_(std::move(modules)), diffs_(std::move(diffs)) {
  if (modules_.empty()) throw structural_error("complex needs at least one module");
  if (diffs_.size() + 1 != modules_.size())
    throw structural_error("complex: differential count mismatch");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].cols() != modules_[k].rank() ||
        diffs_[k].rows() != modules_[k + 1].rank())
      throw structural_error("complex: differential shape mismatch");
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!diffs_[k + 1].multiply(diffs_[k]).is_zero())
      throw structural_error("complex: d^2 != 0");
}

const FreeModule& FreeComplex::module(int degree) const {
  if (!has_degree(degree)) throw structural_error("degree out of range");
  return modules_[static_cast<std::size_t>(degree - lo_)];
}

const PolyMatrix& FreeComplex::diff(int degree) const {
  if (degree < lo_ || degree >= hi()) throw structural_error("no differential at degree");
  return diffs_[static_cast<std::size_t>(degree - lo_)];
}

std::vector<std::pair<int, std::vector<int>>> FreeComplex::twist_table() const {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int d = lo_; d <= hi(); ++d) {
    std::vector<int> t = module(d).twists;
    std::sort(t.begin(), t.end());
    out.emplace_back(d, std::move(t));
  }
  return out;
}

FreeComplex FreeComplex::twisted(int n) const {
  std::vector<FreeModule> mods = modules_;
  for (auto& m : mods)
    for (int& t : m.twists) t -= n;  // A(-t)(n) = A(-(t-n))
  return FreeComplex(lo_, std::move(mods), diffs_, field_, nvars_);
}

FreeComplex FreeComplex::shifted(int n) const {
  return FreeComplex(lo_ - n, modules_, diffs_, field_, nvars_);
}

FreeComplex FreeComplex::dualized() const {
  const int h = hi();
  std::vector<FreeModule> mods;
  std::vector<PolyMatrix> diffs;
  for (int d = h; d >= lo_; --d) {
    FreeModule m = module(d);
    for (int& t : m.twists) t = -t;
    mods.push_back(std::move(m));
  }
  // dual of d_k : C^k -> C^{k+1} lives at degree -k-1, with the Koszul sign
  // (-1)^k on the transpose; double dual is the original after the
  // alternating-sign change of basis.
  for (int d = h - 1; d >= lo_; --d) {
    PolyMatrix t = diff(d).transposed();
    if (d % 2 != 0) {
      for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) = -t.at(r, c);
    }
    diffs.push_back(std::move(t));
  }
  return FreeComplex(-h, std::move(mods), std::move(diffs), field_, nvars_);
}

FreeComplex FreeComplex::tensor(const FreeComplex& a, const FreeComplex& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_)
    throw structural_error("tensor: ring mismatch");
  const int lo = a.lo_ + b.lo_, hi = a.hi() + b.hi();

  // generator layout per total degree: (da, ia, ib) with da ascending
  struct Gen {
    int da, db;
    std::size_t ia, ib;
  };
  std::vector<std::vector<Gen>> gens(static_cast<std::size_t>(hi - lo + 1));
  std::vector<FreeModule> mods(gens.size());
  for (int da = a.lo_; da <= a.hi(); ++da)
    for (int db = b.lo_; db <= b.hi(); ++db) {
      auto& g = gens[static_cast<std::size_t>(da + db - lo)];
      auto& m = mods[static_cast<std::size_t>(da + db - lo)];
      for (std::size_t ia = 0; ia < a.module(da).rank(); ++ia)
        for (std::size_t ib = 0; ib < b.module(db).rank(); ++ib) {
          g.push_back({da, db, ia, ib});
          m.twists.push_back(a.module(da).twists[ia] + b.module(db).twists[ib]);
        }
    }

  auto index_of = [&](int total, int da, std::size_t ia, std::size_t ib) {
    const auto& g = gens[static_cast<std::size_t>(total - lo)];
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k].da == da && g[k].ia == ia && g[k].ib == ib) return k;
    throw structural_error("tensor: generator lookup failed");
  };

  std::vector<PolyMatrix> diffs;
  for (int n = lo; n < hi; ++n) {
    const auto& src = gens[static_cast<std::size_t>(n - lo)];
    PolyMatrix m(mods[static_cast<std::size_t>(n + 1 - lo)].rank(), src.size(),
                 a.field_, a.nvars_);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Gen& g = src[c];
      // d_a part
      if (g.da < a.hi()) {
        const PolyMatrix& da = a.diff(g.da);
        for (std::size_t r = 0; r < da.rows(); ++r) {
          if (da.at(r, g.ia).is_zero()) continue;
          std::size_t row = index_of(n + 1, g.da + 1, r, g.ib);
          m.at(row, c) = m.at(row, c) + da.at(r, g.ia);
        }
      }
      // (-1)^{da} d_b part
      if (g.db < b.hi()) {
        const PolyMatrix& db = b.diff(g.db);
        bool flip = (g.da % 2) != 0;
        for (std::size_t r = 0; r < db.rows(); ++r) {
          if (db.at(r, g.ib).is_zero()) continue;
          std::size_t row = index_of(n + 1, g.da, g.ia, r);
          GradedPolynomial e = db.at(r, g.ib);
          if (flip) e = -e;
          m.at(row, c) = m.at(row, c) + e;
        }
      }
    }
    diffs.push_back(std::move(m));
  }
  return FreeComplex(lo, std::move(mods), std::move(diffs), a.field_, a.nvars_);
}

void FreeComplex::check_homogeneous(const Weighting& w) const {
  for (int d = lo_; d < hi(); ++d) {
    const PolyMatrix& m = diff(d);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        int want = module(d).twists[c] - module(d + 1).twists[r];
        if (!m.at(r, c).homogeneity(w).has_weight(want))
          throw structural_error("differential entry not homogeneous of forced weight");
      }
  }
}

FreeComplex FreeComplex::minimized() const {
  std::vector<FreeModule> mods = modules_;
  std::vector<PolyMatrix> diffs = diffs_;

  auto is_unit = [](const GradedPolynomial& p) {
    return p.term_count() == 1 && p.leading_monomial().is_one();
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < diffs.size() && !progress; ++k) {
      PolyMatrix& d = diffs[k];
      for (std::size_t r = 0; r < d.rows() && !progress; ++r)
        for (std::size_t c = 0; c < d.cols() && !progress; ++c) {
          if (!is_unit(d.at(r, c))) continue;
          progress = true;
          Scalar u = d.at(r, c).leading_coefficient();
          // corrected middle differential on the surviving generators
          PolyMatrix nd(d.rows() - 1, d.cols() - 1, field_, nvars_);
          for (std::size_t r2 = 0, ro = 0; r2 < d.rows(); ++r2) {
            if (r2 == r) continue;
            for (std::size_t c2 = 0, co = 0; c2 < d.cols(); ++c2) {
              if (c2 == c) continue;
              nd.at(ro, co) =
                  d.at(r2, c2) - d.at(r2, c).times_scalar(u.inverse()) * d.at(r, c2);
              ++co;
            }
            ++ro;
          }
          auto drop = [](std::vector<int>& v, std::size_t i) { v.erase(v.begin() + static_cast<long>(i)); };
          drop(mods[k].twists, c);
          drop(mods[k + 1].twists, r);
          d = std::move(nd);
          if (k > 0) {  // drop row c of the incoming differential
            PolyMatrix& prev = diffs[k - 1];
            PolyMatrix np(prev.rows() - 1, prev.cols(), field_, nvars_);
            for (std::size_t r2 = 0, ro = 0; r2 < prev.rows(); ++r2) {
              if (r2 == c) continue;
              for (std::size_t c2 = 0; c2 < prev.cols(); ++c2)
                np.at(ro, c2) = prev.at(r2, c2);
              ++ro;
            }
            prev = std::move(np);
          }
          if (k + 1 < diffs.size()) {  // drop column r of the outgoing differential
            PolyMatrix& next = diffs[k + 1];
            PolyMatrix nn(next.rows(), next.cols() - 1, field_, nvars_);
            for (std::size_t r2 = 0; r2 < next.rows(); ++r2)
              for (std::size_t c2 = 0, co = 0; c2 < next.cols(); ++c2) {
                if (c2 == r) continue;
                nn.at(r2, co) = next.at(r2, c2);
                ++co;
              }
            next = std::move(nn);
          }
        }
    }
  }
  // drop empty outer degrees
  std::size_t first = 0, last = mods.size() - 1;
  while (first < last && mods[first].rank() == 0) ++first;
  while (last > first && mods[last].rank() == 0) --last;
  std::vector<FreeModule> m2(mods.begin() + static_cast<long>(first),
                             mods.begin() + static_cast<long>(last) + 1);
  std::vector<PolyMatrix> d2(diffs.begin() + static_cast<long>(first),
                             diffs.begin() + static_cast<long>(last));
  return FreeComplex(lo_ + static_cast<int>(first), std::move(m2), std::move(d2),
                     field_, nvars_);
}

// --- subset machinery --------------------------------------------------------

namespace {

/// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::size_t subset_index(const std::vector<std::vector<std::size_t>>& list,
                         const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == s) return i;
  throw structural_error("subset lookup failed");
}

}  // namespace

// --- Koszul ------------------------------------------------------------------

FreeComplex koszul_complex(const RingSpec& spec) {
  spec.validate();
  const std::size_t s = spec.s();
  const std::size_t nv = spec.weighting.size();
  std::vector<int> degs;
  for (const auto& rel : spec.relations) {
    WeightClass wc = rel.homogeneity(spec.weighting);
    if (!wc.is_homogeneous()) throw structural_error("inhomogeneous relation");
    degs.push_back(wc.kind == WeightClass::Kind::Homogeneous ? wc.weight : 0);
  }

  std::vector<FreeModule> mods;       // degree -s .. 0
  std::vector<PolyMatrix> diffs;
  std::vector<std::vector<std::vector<std::size_t>>> bases;  // per degree
  for (std::size_t j = s + 1; j-- > 0;) {  // j = subset size, degree -j
    auto basis = subsets(s, j);
    FreeModule m;
    for (const auto& sigma : basis) {
      int t = 0;
      for (std::size_t i : sigma) t += degs[i];
      m.twists.push_back(t);
    }
    bases.push_back(basis);
    mods.push_back(std::move(m));
  }
  for (std::size_t k = 0; k + 1 < bases.size(); ++k) {
    const auto& src = bases[k];       // size s-k subsets
    const auto& tgt = bases[k + 1];   // size s-k-1 subsets
    PolyMatrix d(tgt.empty() ? 0 : tgt.size(), src.size(), spec.field, nv);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& sigma = src[c];
      for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
        std::vector<std::size_t> tau = sigma;
        tau.erase(tau.begin() + static_cast<long>(pos));
        std::size_t row = subset_index(tgt, tau);
        GradedPolynomial e = spec.relations[sigma[pos]];
        if (pos % 2 != 0) e = -e;
        d.at(row, c) = d.at(row, c) + e;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(-static_cast<int>(s), std::move(mods), std::move(diffs),
                     spec.field, nv);
}

// --- Taylor ------------------------------------------------------------------

TaylorResolution taylor_resolution(const std::vector<Monomial>& gens,
                                   const Weighting& w, Field field) {
  if (gens.empty()) throw structural_error("taylor: empty generator set");
  const std::size_t m = gens.size();
  const std::size_t nv = w.size();
  for (const auto& g : gens) {
    if (g.nvars() != nv) throw structural_error("taylor: monomial length mismatch");
    for (std::size_t v = 0; v < nv; ++v)
      if (g.exponent(v) < 0) throw structural_error("taylor: negative exponent");
  }

  auto lcm_of = [&](const std::vector<std::size_t>& sigma) {
    Monomial l = gens[sigma[0]];
    for (std::size_t i = 1; i < sigma.size(); ++i) l = l.lcm(gens[sigma[i]]);
    return l;
  };

  std::vector<FreeModule> mods;
  std::vector<std::vector<Monomial>> gens_by_degree;
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  for (std::size_t j = m; j >= 1; --j) {  // degree -(j-1), subsets of size j
    auto basis = subsets(m, j);
    FreeModule mod;
    std::vector<Monomial> mons;
    for (const auto& sigma : basis) {
      Monomial l = lcm_of(sigma);
      mod.twists.push_back(l.weight(w));
      mons.push_back(std::move(l));
    }
    bases.push_back(basis);
    mods.push_back(std::move(mod));
    gens_by_degree.push_back(std::move(mons));
  }

  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 0; k + 1 < bases.size(); ++k) {
    const auto& src = bases[k];
    const auto& tgt = bases[k + 1];
    PolyMatrix d(tgt.size(), src.size(), field, nv);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& sigma = src[c];
      Monomial lsigma = lcm_of(sigma);
      for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
        std::vector<std::size_t> tau = sigma;
        tau.erase(tau.begin() + static_cast<long>(pos));
        std::size_t row = subset_index(tgt, tau);
        Monomial quot = lsigma.quotient(lcm_of(tau));
        Scalar c0 = pos % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
        d.at(row, c) = d.at(row, c) + GradedPolynomial::from_term(field, quot, c0);
      }
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex cx(-static_cast<int>(m) + 1, std::move(mods), std::move(diffs), field, nv);
  return {std::move(cx), std::move(gens_by_degree)};
}

// --- weight truncation at generator level ------------------------------------

std::vector<Monomial> truncate_generators(const RingSpec& spec, int w) {
  const auto& wt = spec.weighting;
  auto positive = wt.block(1);
  if (positive.empty()) throw structural_error("truncate_generators: empty positive block");
  const std::size_t nv = wt.size();
  if (w <= 0) return {Monomial(nv)};

  int max_weight = 0;
  for (std::size_t v : positive) max_weight = std::max(max_weight, wt.weight(v));

  // minimal generators: weight(m) >= w and every variable quotient drops
  // below w; such m have weight < w + max positive weight
  std::vector<Monomial> out;
  std::vector<int> lo(nv, 0), hi(nv, 0);
  for (std::size_t v : positive) hi[v] = (w + max_weight - 1) / wt.weight(v);
  for (int target = w; target <= w + max_weight - 1; ++target) {
    for_each_in_box(wt, lo, hi, target, [&](const Monomial& m) {
      for (std::size_t v = 0; v < nv; ++v)
        if (m.exponent(v) > 0 && target - wt.weight(v) >= w) return;  // reducible
      out.push_back(m);
    });
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return Monomial::compare_degrevlex(a, b) < 0;
  });
  return out;
}

// --- non-positive presentation ------------------------------------------------

NonpositiveReport nonpositive_presentation_check(const RingSpec& spec,
                                                 const CiReport& ci) {
  if (ci.dimension != Verdict::Pass)
    throw unsupported_error(
        "non-positive presentation check requires a certified complete "
        "intersection (CI level 1 dimension verdict: " +
        verdict_name(ci.dimension) + ")");
  FreeComplex k = koszul_complex(spec);
  NonpositiveReport rep;
  rep.pass = true;
  for (auto& [deg, twists] : k.twist_table()) {
    for (int t : twists)
      if (t > 0) rep.pass = false;
    rep.tor_weights.by_degree.emplace_back(deg, twists);
  }
  return rep;
}

}  // namespace gradedflip
