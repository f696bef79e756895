#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricapolar/toric_fan.hpp"

namespace toricapolar {

using Monomial = std::vector<int>;

/// S is the Cox ring (acts by contraction), T its dual module.
enum class Side { Primal, Dual };

const char* side_name(Side s);

/// Sparse polynomial with exact rational coefficients. Terms are kept in descending
/// lexicographic order of exponent vectors; zero coefficients are never stored.
struct MultiPoly {
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Side side = Side::Primal;
  Terms terms;

  MultiPoly() = default;
  explicit MultiPoly(Side s) : side(s) {}

  static MultiPoly constant(Side s, std::size_t nvars, const Rational& c);
  static MultiPoly monomial(Side s, Monomial m, const Rational& c = 1);

  bool is_zero() const noexcept { return terms.empty(); }
  Rational coefficient(const Monomial& m) const;
  // Adds c to the coefficient of m, erasing it if the result is zero.
  void add_term(const Monomial& m, const Rational& c);

  bool operator==(const MultiPoly&) const = default;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, const MultiPoly& p);
/// Product in S; throws SideMismatch unless both factors are primal.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

/// Weight w on the free part of Cl with w . deg(x_i) >= 1 for every variable.
struct PositivityCertificate {
  std::vector<std::int64_t> weight;
};

bool is_valid_certificate(const FanModel& fan, const PositivityCertificate& cert);
/// Searches weights of increasing max-norm up to `bound`; throws NoCertificate.
PositivityCertificate find_certificate(const FanModel& fan, std::int64_t bound = 16);
std::int64_t grade(const PositivityCertificate& cert, const DegreeClass& d);

/// Monomials of degree alpha in descending lexicographic order.
std::vector<Monomial> monomial_basis(const FanModel& fan, const PositivityCertificate& cert, const DegreeClass& alpha);

/// One signed term of a parsed expression; exponents may be negative for Laurent input.
struct ParsedTerm {
  Rational coefficient;
  std::vector<int> exponents;
};

/// Parses sums of products like `3/4*a0^2*b1 - a1`. Names are matched exactly.
std::vector<ParsedTerm> parse_terms(std::string_view text, const std::vector<std::string>& names,
                                    bool allow_negative_exponents);
std::string format_terms(const std::vector<ParsedTerm>& terms, const std::vector<std::string>& names);

/// The Cox ring of a fan with named variables on both sides and a fixed positivity certificate.
class CoxRing {
 public:
  CoxRing(FanModel fan, std::vector<std::string> primal_names = {}, std::vector<std::string> dual_names = {},
          std::optional<PositivityCertificate> cert = std::nullopt);

  const FanModel& fan() const noexcept { return *fan_; }
  const GradedGroup& group() const noexcept { return fan_->class_group(); }
  const PositivityCertificate& certificate() const noexcept { return cert_; }
  std::size_t nvars() const noexcept { return fan_->ray_count(); }
  const std::vector<std::string>& names(Side s) const noexcept { return s == Side::Primal ? primal_ : dual_; }

  /// Cached monomial basis of the degree-alpha piece.
  const std::vector<Monomial>& basis(const DegreeClass& alpha) const;
  DegreeClass degree(const Monomial& m) const { return fan_->degree_of(m); }
  /// Common degree of all terms, or nullopt for zero or inhomogeneous input.
  std::optional<DegreeClass> degree(const MultiPoly& p) const;

  MultiPoly parse(std::string_view text, Side side) const;
  std::string format(const MultiPoly& p) const;
  std::string format(const Monomial& m, Side side) const;

 private:
  std::shared_ptr<const FanModel> fan_;
  std::vector<std::string> primal_;
  std::vector<std::string> dual_;
  PositivityCertificate cert_;
  mutable std::mutex cache_mutex_;
  mutable std::map<DegreeClass, std::unique_ptr<const std::vector<Monomial>>> cache_;
};

/// Homogeneous generators of an ideal of S with their degrees.
struct IdealGens {
  std::vector<MultiPoly> generators;
  std::vector<DegreeClass> degrees;
};

/// Parses each string as a primal polynomial; throws NonHomogeneousGenerator or InvalidInput on zero.
IdealGens make_ideal(const CoxRing& ring, const std::vector<std::string>& generators);
IdealGens make_ideal(const CoxRing& ring, std::vector<MultiPoly> generators);

}  // namespace toricapolar
