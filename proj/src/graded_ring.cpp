#include "toricapolar/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "toricapolar/error.hpp"

namespace toricapolar {

const char* side_name(Side s) { return s == Side::Primal ? "primal" : "dual"; }

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(Side s, std::size_t nvars, const Rational& c) {
  return monomial(s, Monomial(nvars, 0), c);
}

MultiPoly MultiPoly::monomial(Side s, Monomial m, const Rational& c) {
  MultiPoly p(s);
  if (c != 0) p.terms.emplace(std::move(m), c);
  return p;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.side != b.side) throw Error(ErrorKind::SideMismatch, "adding primal and dual polynomials");
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + Rational(-1) * b; }

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly out(p.side);
  if (c == 0) return out;
  for (const auto& [m, v] : p.terms) out.terms.emplace(m, c * v);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.side != Side::Primal || b.side != Side::Primal)
    throw Error(ErrorKind::SideMismatch, "multiplication is only defined in the Cox ring");
  MultiPoly out(Side::Primal);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (ma.size() != mb.size()) throw Error(ErrorKind::InvalidInput, "monomials of different length");
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

// ---------------------------------------------------------------- certificates and bases

std::int64_t grade(const PositivityCertificate& cert, const DegreeClass& d) {
  if (cert.weight.size() != d.free_part.size()) throw Error(ErrorKind::GroupMismatch, "certificate width mismatch");
  std::int64_t g = 0;
  for (std::size_t i = 0; i < cert.weight.size(); ++i) g += cert.weight[i] * d.free_part[i];
  return g;
}

bool is_valid_certificate(const FanModel& fan, const PositivityCertificate& cert) {
  if (cert.weight.size() != fan.class_group().free_rank()) return false;
  return std::all_of(fan.var_degrees().begin(), fan.var_degrees().end(),
                     [&](const DegreeClass& d) { return grade(cert, d) >= 1; });
}

PositivityCertificate find_certificate(const FanModel& fan, std::int64_t bound) {
  const std::size_t l = fan.class_group().free_rank();
  if (l == 0) throw Error(ErrorKind::NoCertificate, "class group has no free part");
  for (std::int64_t norm = 1; norm <= bound; ++norm) {
    // all w in [-norm, norm]^l with max |w_i| == norm, positive coordinates first
    std::vector<std::int64_t> w(l, norm);
    for (;;) {
      bool on_shell = std::any_of(w.begin(), w.end(), [&](std::int64_t v) { return v == norm || v == -norm; });
      PositivityCertificate cert{w};
      if (on_shell && is_valid_certificate(fan, cert)) return cert;
      std::size_t i = l;
      while (i > 0 && w[i - 1] == -norm) {
        w[i - 1] = norm;
        --i;
      }
      if (i == 0) break;
      --w[i - 1];
    }
  }
  throw Error(ErrorKind::NoCertificate, "no positive grading weight with entries up to " + std::to_string(bound));
}

std::vector<Monomial> monomial_basis(const FanModel& fan, const PositivityCertificate& cert, const DegreeClass& alpha) {
  if (!is_valid_certificate(fan, cert)) throw Error(ErrorKind::NoCertificate, "invalid positivity certificate");
  const auto a = fan.class_group().normalize(alpha);
  const std::int64_t target = grade(cert, a);
  std::vector<Monomial> out;
  if (target < 0) return out;
  const std::size_t r = fan.ray_count();
  std::vector<std::int64_t> weights(r);
  for (std::size_t i = 0; i < r; ++i) weights[i] = grade(cert, fan.var_degrees()[i]);

  Monomial e(r, 0);
  // descending exponents at each position yields descending lex order
  auto recurse = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == r) {
      if (remaining % weights[i] != 0) return;
      e[i] = static_cast<int>(remaining / weights[i]);
      if (fan.degree_of(e) == a) out.push_back(e);
      return;
    }
    for (std::int64_t k = remaining / weights[i]; k >= 0; --k) {
      e[i] = static_cast<int>(k);
      self(self, i + 1, remaining - k * weights[i]);
    }
    e[i] = 0;
  };
  recurse(recurse, 0, target);
  return out;
}

// ---------------------------------------------------------------- text syntax

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const std::vector<std::string>& names, bool allow_negative)
      : text_(text), names_(names), allow_negative_(allow_negative) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      ParsedTerm t = term();
      t.coefficient *= sign;
      out.push_back(std::move(t));
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer natural() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    int sign = 1;
    if (peek() == '-') {
      if (!allow_negative_) fail("negative exponent");
      sign = -1;
      ++pos_;
    }
    Integer v = natural();
    if (!v.fits_sint_p()) fail("exponent too large");
    return sign * static_cast<int>(v.get_si());
  }

  ParsedTerm term() {
    ParsedTerm t{Rational(1), std::vector<int>(names_.size(), 0)};
    for (;;) {
      skip_ws();
      factor(t);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = natural();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = natural();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      t.coefficient *= q;
      return;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a variable or number");
    std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) fail("unknown variable '" + name + "'");
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = exponent();
    }
    t.exponents[static_cast<std::size_t>(it - names_.begin())] += e;
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  bool allow_negative_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const std::vector<int>& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void check_names(const std::vector<std::string>& names, std::size_t n) {
  if (names.size() != n) throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n) + " variable names");
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
      throw Error(ErrorKind::InvalidInput, "bad variable name '" + s + "'");
    for (char ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw Error(ErrorKind::InvalidInput, "bad variable name '" + s + "'");
    if (!seen.insert(s).second) throw Error(ErrorKind::InvalidInput, "duplicate variable name '" + s + "'");
  }
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, const std::vector<std::string>& names,
                                    bool allow_negative_exponents) {
  return TermParser(text, names, allow_negative_exponents).parse();
}

std::string format_terms(const std::vector<ParsedTerm>& terms, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    const bool negative = t.coefficient < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(t.coefficient);
    std::string mono = monomial_text(t.exponents, names);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- CoxRing

CoxRing::CoxRing(FanModel fan, std::vector<std::string> primal_names, std::vector<std::string> dual_names,
                 std::optional<PositivityCertificate> cert)
    : fan_(std::make_shared<const FanModel>(std::move(fan))),
      primal_(primal_names.empty() ? default_names("a", fan_->ray_count()) : std::move(primal_names)),
      dual_(dual_names.empty() ? default_names("x", fan_->ray_count()) : std::move(dual_names)) {
  check_names(primal_, fan_->ray_count());
  check_names(dual_, fan_->ray_count());
  if (cert) {
    if (!is_valid_certificate(*fan_, *cert)) throw Error(ErrorKind::NoCertificate, "supplied certificate is not positive");
    cert_ = std::move(*cert);
  } else {
    cert_ = find_certificate(*fan_);
  }
}

const std::vector<Monomial>& CoxRing::basis(const DegreeClass& alpha) const {
  auto a = group().normalize(alpha);
  std::lock_guard lock(cache_mutex_);
  auto it = cache_.find(a);
  if (it == cache_.end())
    it = cache_.emplace(a, std::make_unique<const std::vector<Monomial>>(monomial_basis(*fan_, cert_, a))).first;
  return *it->second;
}

std::optional<DegreeClass> CoxRing::degree(const MultiPoly& p) const {
  std::optional<DegreeClass> d;
  for (const auto& [m, c] : p.terms) {
    auto dm = degree(m);
    if (d && *d != dm) return std::nullopt;
    d = std::move(dm);
  }
  return d;
}

MultiPoly CoxRing::parse(std::string_view text, Side side) const {
  MultiPoly p(side);
  for (auto& t : parse_terms(text, names(side), false)) p.add_term(t.exponents, t.coefficient);
  return p;
}

std::string CoxRing::format(const MultiPoly& p) const {
  std::vector<ParsedTerm> terms;
  for (const auto& [m, c] : p.terms) terms.push_back({c, m});
  return format_terms(terms, names(p.side));
}

std::string CoxRing::format(const Monomial& m, Side side) const {
  auto s = monomial_text(m, names(side));
  return s.empty() ? "1" : s;
}

IdealGens make_ideal(const CoxRing& ring, std::vector<MultiPoly> generators) {
  IdealGens out;
  for (auto& g : generators) {
    if (g.side != Side::Primal) throw Error(ErrorKind::SideMismatch, "ideal generators live in the Cox ring");
    if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "zero ideal generator");
    auto d = ring.degree(g);
    if (!d) throw Error(ErrorKind::NonHomogeneousGenerator, "generator " + ring.format(g) + " is not homogeneous");
    out.degrees.push_back(std::move(*d));
    out.generators.push_back(std::move(g));
  }
  return out;
}

IdealGens make_ideal(const CoxRing& ring, const std::vector<std::string>& generators) {
  std::vector<MultiPoly> polys;
  for (const auto& g : generators) polys.push_back(ring.parse(g, Side::Primal));
  return make_ideal(ring, std::move(polys));
}

}  // namespace toricapolar
