// gradedflip: exact checks for Z-graded weighted rings from the command line.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input, 3 budget
// exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gradedflip/cech.hpp"
#include "gradedflip/ci.hpp"
#include "gradedflip/complexes.hpp"
#include "gradedflip/report.hpp"
#include "gradedflip/ring_spec.hpp"
#include "gradedflip/version.hpp"
#include "gradedflip/windows.hpp"

namespace gf = gradedflip;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw gf::parse_error("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Replace (or prepend) the "field ..." line of a spec text.
std::string override_field(const std::string& text, const std::string& field) {
  std::string line;
  if (field == "Q") {
    line = "field Q";
  } else if (field.rfind("GF:", 0) == 0) {
    line = "field GF " + field.substr(3);
  } else {
    throw gf::parse_error("--field expects Q or GF:<p>", 0, 0);
  }
  std::istringstream in(text);
  std::ostringstream out;
  std::string cur;
  bool replaced = false;
  while (std::getline(in, cur)) {
    std::string stripped = cur;
    std::size_t first = stripped.find_first_not_of(" \t");
    if (!replaced && first != std::string::npos &&
        stripped.compare(first, 6, "field ") == 0) {
      out << line << '\n';
      replaced = true;
    } else {
      out << cur << '\n';
    }
  }
  if (!replaced) return line + "\n" + out.str();
  return out.str();
}

void emit(const gf::Json& j, bool json) {
  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    // compact human rendering: flatten one level
    for (const auto& [k, v] : j.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << '\n';
  }
}

gf::Json head(const char* command, const std::string& text) {
  gf::Json out;
  out["schema"] = gf::kJsonSchema;
  out["tool_version"] = gf::kVersion;
  out["command"] = command;
  out["input_digest"] = gf::spec_digest(text);
  return out;
}

struct Range {
  int lo = 0, hi = 0;
  bool set = false;
};

Range parse_range(const std::string& s) {
  Range r;
  if (s.empty()) return r;
  std::size_t pos = s.find("..");
  if (pos == std::string::npos)
    throw gf::parse_error("--weights expects LO..HI", 0, 0);
  r.lo = std::stoi(s.substr(0, pos));
  r.hi = std::stoi(s.substr(pos + 2));
  if (r.lo > r.hi) throw gf::parse_error("--weights: LO > HI", 0, 0);
  r.set = true;
  return r;
}

Range resolve_range(const Range& r, const gf::RingSpec& spec) {
  if (r.set) return r;
  auto [lo, hi] = gf::default_weight_range(spec);
  return {lo, hi, true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded-ring toolkit: local cohomology, duality, windows,\n"
               "and complete-intersection certification for weighted rings."};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t budget = 1'000'000;
  std::string field_override;
  app.add_flag("--json", json, "Emit machine-readable JSON");
  app.add_option("--budget", budget, "Groebner step budget")->capture_default_str();
  app.add_option("--field", field_override, "Override coefficient field (Q or GF:<p>)");

  std::string spec_path;
  int ci_level = 1;
  bool quotient_plus = false;
  std::string side_str = "plus";
  std::string weights_str;
  int window_w = 0;
  int twist = 0;
  int mem_i = 0;
  bool membership = false;

  auto add_spec = [&](CLI::App* sub) {
    sub->fallthrough();  // allow --json/--budget/--field after the subcommand
    sub->add_option("spec", spec_path, "Ring description file ('-' for stdin)")
        ->required();
  };

  CLI::App* c_validate = app.add_subcommand("validate", "Structural validation and complete-intersection hypotheses");
  add_spec(c_validate);
  c_validate->add_option("--ci-level", ci_level, "1: degrees+dim(A); 2: also dim of the positive-block quotient")
      ->check(CLI::Range(1, 2))->capture_default_str();

  CLI::App* c_dim = app.add_subcommand("dim", "Krull dimension via Groebner bases");
  add_spec(c_dim);
  c_dim->add_flag("--quotient-plus", quotient_plus, "Dimension of the quotient by the positive-block variables");

  CLI::App* c_koszul = app.add_subcommand("koszul", "Koszul complex of the relations");
  add_spec(c_koszul);

  CLI::App* c_nonpos = app.add_subcommand("nonpositive", "Non-positive presentation criterion (Tor weights <= 0)");
  add_spec(c_nonpos);

  CLI::App* c_cohom = app.add_subcommand("cohomology", "Weightwise local cohomology table");
  add_spec(c_cohom);
  c_cohom->add_option("--side", side_str, "plus or minus")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  c_cohom->add_option("--weights", weights_str, "Weight window LO..HI");

  CLI::App* c_vanish = app.add_subcommand("vanishing", "Canonical vanishing at the splitting weight a");
  add_spec(c_vanish);
  c_vanish->add_option("--weights", weights_str, "Weight window LO..HI");

  CLI::App* c_dual = app.add_subcommand("duality", "Degreewise local duality between the two sides");
  add_spec(c_dual);
  c_dual->add_option("--weights", weights_str, "Weight window LO..HI");

  CLI::App* c_window = app.add_subcommand("window", "Generators of the window subcategory at a cutoff");
  add_spec(c_window);
  c_window->add_option("--w", window_w, "Window cutoff")->capture_default_str();
  c_window->add_option("--side", side_str, "plus or minus")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  CLI::Option* mem_opt = c_window->add_option("--member", mem_i, "Test membership of the twist A(-i)");
  c_window->add_option("--weights", weights_str, "Weight window LO..HI for the membership check");

  CLI::App* c_functor = app.add_subcommand("functor-image", "Presentation of the comparison functor's image of O(i)");
  add_spec(c_functor);
  c_functor->add_option("--twist", twist, "Twist i of the source line bundle")->required();

  CLI::App* c_suite = app.add_subcommand("suite", "Run every applicable check");
  add_spec(c_suite);
  c_suite->add_option("--weights", weights_str, "Weight window LO..HI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    std::string text = read_input(spec_path);
    if (!field_override.empty()) text = override_field(text, field_override);
    gf::RingSpec spec = gf::parse_ring_spec(text);
    gf::GroebnerOptions gopts{budget};
    membership = mem_opt->count() > 0;

    if (c_validate->parsed()) {
      spec.validate();
      gf::Json out = head("validate", text);
      out["structure"] = "pass";
      if (!spec.is_polynomial_ring()) {
        gf::CiReport rep = gf::validate_ci_assumptions(spec, ci_level, gopts);
        out["ci"] = gf::ci_to_json(rep);
        emit(out, json);
        if (rep.dimension == gf::Verdict::Undetermined ||
            rep.quotient_dimension == gf::Verdict::Undetermined)
          return kExitBudget;
        return rep.passed() ? kExitPass : kExitCheckFailed;
      }
      out["ci"] = "not applicable (polynomial ring)";
      emit(out, json);
      return kExitPass;
    }

    if (c_dim->parsed()) {
      gf::RingSpec target = spec;
      if (quotient_plus) {
        for (std::size_t i : spec.weighting.block(1))
          target.relations.push_back(
              gf::GradedPolynomial::variable(spec.field, spec.weighting.size(), i));
      }
      gf::Json out = head("dim", text);
      if (target.relations.empty()) {
        out["dim"] = static_cast<long>(spec.weighting.size());
        out["unit_ideal"] = false;
      } else {
        gf::GroebnerBasis gb = gf::buchberger(target.relations, gopts);
        auto d = gf::krull_dimension(gb);
        out["unit_ideal"] = !d.has_value();
        if (d) out["dim"] = *d;
      }
      emit(out, json);
      return kExitPass;
    }

    if (c_koszul->parsed()) {
      gf::FreeComplex kz = gf::koszul_complex(spec);
      gf::Json out = head("koszul", text);
      out["complex"] = gf::complex_to_json(kz, spec.weighting);
      emit(out, json);
      return kExitPass;
    }

    if (c_nonpos->parsed()) {
      gf::CiReport ci = gf::validate_ci_assumptions(spec, 1, gopts);
      gf::Json out = head("nonpositive", text);
      out["ci"] = gf::ci_to_json(ci);
      if (ci.dimension == gf::Verdict::Undetermined) {
        emit(out, json);
        return kExitBudget;
      }
      gf::NonpositiveReport rep = gf::nonpositive_presentation_check(spec, ci);
      out["pass"] = rep.pass;
      gf::Json tor = gf::Json::array();
      for (const auto& [deg, ws] : rep.tor_weights.by_degree) {
        gf::Json e;
        e["degree"] = deg;
        e["weights"] = ws;
        tor.push_back(std::move(e));
      }
      out["tor_weights"] = std::move(tor);
      emit(out, json);
      return rep.pass ? kExitPass : kExitCheckFailed;
    }

    if (c_cohom->parsed()) {
      Range r = resolve_range(parse_range(weights_str), spec);
      gf::Side side = side_str == "plus" ? gf::Side::Plus : gf::Side::Minus;
      gf::CechComplex cx(spec, side, /*extended=*/true);
      gf::CohomologyTable t = gf::cohomology_table(cx, r.lo, r.hi);
      gf::Json out = head("cohomology", text);
      out["weight_range"] = {r.lo, r.hi};
      out["table"] = gf::table_to_json(t, side);
      emit(out, json);
      return kExitPass;
    }

    if (c_vanish->parsed()) {
      Range r = resolve_range(parse_range(weights_str), spec);
      gf::FlipInvariants inv = gf::flip_invariants(spec);
      if (!inv.a)
        throw gf::unsupported_error("the splitting weight a is not determined");
      gf::VanishingReport rep = gf::canonical_vanishing_check(spec, *inv.a, r.lo, r.hi);
      gf::Json out = head("vanishing", text);
      out["a"] = rep.a;
      out["weight_range"] = {r.lo, r.hi};
      if (rep.plus_top_weight) out["plus_top_weight"] = *rep.plus_top_weight;
      if (rep.minus_bottom_weight) out["minus_bottom_weight"] = *rep.minus_bottom_weight;
      out["pass"] = rep.pass;
      emit(out, json);
      return rep.pass ? kExitPass : kExitCheckFailed;
    }

    if (c_dual->parsed()) {
      Range r = resolve_range(parse_range(weights_str), spec);
      gf::FlipInvariants inv = gf::flip_invariants(spec);
      if (!inv.a)
        throw gf::unsupported_error("the splitting weight a is not determined");
      gf::DualityReport rep = gf::duality_check(spec, *inv.a, r.lo, r.hi);
      gf::Json out = head("duality", text);
      out["a"] = rep.a;
      out["n"] = rep.n;
      out["weight_range"] = {r.lo, r.hi};
      gf::Json disc = gf::Json::array();
      for (const auto& d : rep.discrepancies) {
        gf::Json e;
        e["h"] = d.h;
        e["i"] = d.i;
        e["lhs"] = d.lhs;
        e["rhs"] = d.rhs;
        disc.push_back(std::move(e));
      }
      out["discrepancies"] = std::move(disc);
      out["pass"] = rep.pass;
      emit(out, json);
      return rep.pass ? kExitPass : kExitCheckFailed;
    }

    if (c_window->parsed()) {
      gf::Side side = side_str == "plus" ? gf::Side::Plus : gf::Side::Minus;
      gf::WindowSpec win = gf::window_generators(spec, window_w, side);
      gf::Json out = head("window", text);
      out["w"] = win.w;
      out["side"] = gf::side_name(win.side);
      out["twists"] = win.twists;
      out["asserted_not_recomputed"] = win.asserted_not_recomputed;
      if (membership) {
        Range r = resolve_range(parse_range(weights_str), spec);
        gf::MembershipReport mem =
            gf::window_membership(spec, mem_i, window_w, r.lo, r.hi);
        gf::Json jm;
        jm["i"] = mem_i;
        jm["generation_ok"] = mem.generation_ok;
        jm["vanishing_ok"] = mem.vanishing_ok;
        if (mem.top_weight) jm["top_weight"] = *mem.top_weight;
        jm["member"] = mem.member;
        out["membership"] = std::move(jm);
        emit(out, json);
        return mem.member ? kExitPass : kExitCheckFailed;
      }
      emit(out, json);
      return kExitPass;
    }

    if (c_functor->parsed()) {
      gf::FunctorImage img = gf::functor_image(spec, twist);
      gf::Json out = head("functor-image", text);
      out["twist"] = img.source_twist;
      out["presentation"] = gf::complex_to_json(img.presentation, spec.weighting);
      emit(out, json);
      return kExitPass;
    }

    if (c_suite->parsed()) {
      gf::SuiteOptions opts;
      opts.step_budget = budget;
      Range r = parse_range(weights_str);
      if (r.set) {
        opts.ilo = r.lo;
        opts.ihi = r.hi;
      }
      gf::Json out = gf::run_suite(spec, text, opts);
      emit(out, json);
      return out["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
    }

    std::cerr << "no subcommand handled\n";
    return kExitInputError;
  } catch (const gf::budget_error& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const gf::parse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const gf::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitInputError;
  } catch (const gf::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
