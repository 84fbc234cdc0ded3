#include "gradedflip/ring_spec.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gradedflip {

namespace {

// --- polynomial expression parser -------------------------------------------

class ExprParser {
public:
  ExprParser(const std::string& text, const Weighting& w, Field f)
      : text_(text), w_(w), f_(f) {}

  GradedPolynomial parse() {
    GradedPolynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  GradedPolynomial expr() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    GradedPolynomial p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      if (accept('+')) {
        p = p + term();
      } else if (accept('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  GradedPolynomial term() {
    GradedPolynomial p = factor();
    for (;;) {
      skip_ws();
      if (accept('*'))
        p = p * factor();
      else
        return p;
    }
  }

  GradedPolynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected factor");
    char c = text_[pos_];
    GradedPolynomial base = GradedPolynomial::zero(f_, w_.size());
    if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = GradedPolynomial::constant(f_, w_.size(), integer());
      return maybe_pow(base);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      auto idx = w_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      base = GradedPolynomial::variable(f_, w_.size(), *idx);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return maybe_pow(base);
  }

  GradedPolynomial maybe_pow(GradedPolynomial base) {
    skip_ws();
    if (accept('^')) {
      long n = integer();
      if (n < 0) fail("negative exponent");
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, 1, static_cast<int>(pos_) + 1);
  }

  const std::string& text_;
  const Weighting& w_;
  Field f_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long parse_long(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected integer, got '" + s + "'", line, 1);
  }
}

}  // namespace

GradedPolynomial parse_polynomial(const std::string& text, const Weighting& w, Field f) {
  return ExprParser(text, w, f).parse();
}

void RingSpec::validate() const {
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& rel = relations[k];
    if (rel.is_zero())
      throw structural_error("relation " + std::to_string(k + 1) + " is zero");
    WeightClass wc = rel.homogeneity(weighting);
    if (!wc.is_homogeneous()) {
      std::string weights;
      for (const auto& t : rel.terms()) {
        if (!weights.empty()) weights += ", ";
        weights += std::to_string(t.mono.weight(weighting));
      }
      throw structural_error("inhomogeneous relation '" + rel.str(weighting) +
                             "' (term weights " + weights + ")");
    }
  }
  if (template_params) {
    const auto& bp = *template_params;
    for (long v : {bp.lambda, bp.mu, bp.d, bp.e, bp.alpha, bp.beta})
      if (v <= 0) throw structural_error("brown-reid parameters must be positive");
    if (std::gcd(bp.lambda, bp.mu) != 1)
      throw structural_error("brown-reid template requires gcd(lambda, mu) = 1");
  }
}

RingSpec brown_reid_ring(const BrownReidParams& bp, Field field) {
  const long lam = bp.lambda, mu = bp.mu;
  Weighting w({"x1", "x2", "y1", "y2", "y3", "z"},
              {static_cast<int>(lam), static_cast<int>(mu), static_cast<int>(-mu),
               static_cast<int>(-lam - mu * bp.e), -1, 0});
  auto var = [&](std::size_t i) { return GradedPolynomial::variable(field, 6, i); };
  const auto x1 = var(0), x2 = var(1), y1 = var(2), y2 = var(3), y3 = var(4), z = var(5);
  GradedPolynomial f1 =
      x1 * y2 - y1.pow(static_cast<unsigned>(bp.e)) * z.pow(static_cast<unsigned>(bp.alpha)) -
      y3.pow(static_cast<unsigned>(mu * bp.e));
  GradedPolynomial f2 =
      y1 * x2 - z.pow(static_cast<unsigned>(bp.beta)) -
      x1.pow(static_cast<unsigned>(bp.d)) * y3.pow(static_cast<unsigned>(lam * bp.d));
  RingSpec spec;
  spec.field = field;
  spec.weighting = std::move(w);
  spec.relations = {std::move(f1), std::move(f2)};
  spec.kind = BirationalKind::Flip;
  spec.template_params = bp;
  spec.validate();
  return spec;
}

RingSpec parse_ring_spec(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;

  std::optional<Field> field;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::pair<int, std::string>> relation_texts;
  BirationalKind kind = BirationalKind::Unspecified;
  bool kind_seen = false;
  std::optional<BrownReidParams> template_params;

  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    if (auto h = stripped.find('#'); h != std::string::npos) stripped.resize(h);
    auto tok = split_tokens(stripped);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "field") {
      if (field) throw parse_error("duplicate 'field' line", lineno, 1);
      if (tok.size() == 2 && tok[1] == "Q") {
        field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "GF") {
        long p = parse_long(tok[2], lineno);
        if (p < 2) throw parse_error("invalid prime '" + tok[2] + "'", lineno, 1);
        try {
          field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const structural_error& e) {
          throw parse_error(e.what(), lineno, 1);
        }
      } else {
        throw parse_error("expected 'field Q' or 'field GF <prime>'", lineno, 1);
      }
    } else if (key == "var") {
      if (tok.size() != 3) throw parse_error("expected 'var <name> <weight>'", lineno, 1);
      names.push_back(tok[1]);
      weights.push_back(static_cast<int>(parse_long(tok[2], lineno)));
    } else if (key == "rel") {
      auto pos = stripped.find("rel");
      relation_texts.emplace_back(lineno, stripped.substr(pos + 3));
    } else if (key == "kind") {
      if (tok.size() != 2 || (tok[1] != "flip" && tok[1] != "flop"))
        throw parse_error("expected 'kind flip|flop'", lineno, 1);
      kind = tok[1] == "flip" ? BirationalKind::Flip : BirationalKind::Flop;
      kind_seen = true;
    } else if (key == "template") {
      if (tok.size() < 2 || tok[1] != "brown-reid")
        throw parse_error("unknown template", lineno, 1);
      BrownReidParams bp;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos)
          throw parse_error("expected name=<n> in template parameters", lineno, 1);
        std::string name = tok[i].substr(0, eq);
        long v = parse_long(tok[i].substr(eq + 1), lineno);
        if (v <= 0) throw parse_error("parameter '" + name + "' must be positive", lineno, 1);
        if (name == "lambda")
          bp.lambda = v;
        else if (name == "mu")
          bp.mu = v;
        else if (name == "d")
          bp.d = v;
        else if (name == "e")
          bp.e = v;
        else if (name == "alpha")
          bp.alpha = v;
        else if (name == "beta")
          bp.beta = v;
        else
          throw parse_error("unknown template parameter '" + name + "'", lineno, 1);
      }
      template_params = bp;
    } else {
      throw parse_error("unknown directive '" + key + "'", lineno, 1);
    }
  }

  Field f = field.value_or(Field::rationals());

  if (template_params) {
    if (!names.empty() || !relation_texts.empty())
      throw parse_error("template cannot be combined with var/rel lines", lineno, 1);
    if (std::gcd(template_params->lambda, template_params->mu) != 1)
      throw parse_error("brown-reid template requires gcd(lambda, mu) = 1", lineno, 1);
    RingSpec spec = brown_reid_ring(*template_params, f);
    if (kind_seen) spec.kind = kind;
    return spec;
  }

  RingSpec spec;
  spec.field = f;
  try {
    spec.weighting = Weighting(std::move(names), std::move(weights));
  } catch (const structural_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }
  spec.kind = kind;
  for (const auto& [relline, reltext] : relation_texts) {
    try {
      spec.relations.push_back(parse_polynomial(reltext, spec.weighting, f));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), relline, e.column());
    }
  }
  try {
    spec.validate();
  } catch (const structural_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }
  return spec;
}

std::string serialize(const RingSpec& spec) {
  std::ostringstream os;
  os << "field " << spec.field.str() << "\n";
  if (spec.template_params) {
    const auto& bp = *spec.template_params;
    os << "template brown-reid lambda=" << bp.lambda << " mu=" << bp.mu << " d=" << bp.d
       << " e=" << bp.e << " alpha=" << bp.alpha << " beta=" << bp.beta << "\n";
  } else {
    for (std::size_t i = 0; i < spec.weighting.size(); ++i)
      os << "var " << spec.weighting.name(i) << " " << spec.weighting.weight(i) << "\n";
    for (const auto& rel : spec.relations) os << "rel " << rel.str(spec.weighting) << "\n";
  }
  if (spec.kind == BirationalKind::Flip)
    os << "kind flip\n";
  else if (spec.kind == BirationalKind::Flop)
    os << "kind flop\n";
  return os.str();
}

FlipInvariants flip_invariants(const RingSpec& spec) {
  FlipInvariants inv;
  inv.eta_plus = spec.weighting.eta_plus();
  inv.eta_minus = spec.weighting.eta_minus();
  switch (spec.kind) {
    case BirationalKind::Flip:
      inv.a = 1;
      break;
    case BirationalKind::Flop:
      inv.a = 0;
      break;
    case BirationalKind::Unspecified:
      if (spec.is_polynomial_ring())
        inv.a = inv.eta_minus - inv.eta_plus;
      // otherwise a comes from geometry; left unknown
      break;
  }
  return inv;
}

std::string spec_digest(const std::string& text) {
  // normalize: drop CR, trim trailing whitespace per line
  std::string norm;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    norm += line;
    norm += '\n';
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : norm) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gradedflip
