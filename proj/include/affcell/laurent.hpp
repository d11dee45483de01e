#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

using Integer = boost::multiprecision::cpp_int;

// Degree reported for the zero polynomial.
inline constexpr int kDegreeNegInfinity = std::numeric_limits<int>::min();

// Element of Z[q, q^-1]. Terms are kept sorted by ascending exponent and
// never hold a zero coefficient.
class LaurentPoly {
public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c);                 // NOLINT: constants convert implicitly
  explicit LaurentPoly(const Integer& c);
  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  // Builds from arbitrary (exponent, coeff) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  int low_degree() const;
  Integer coeff(int exponent) const;
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly bar() const;
  LaurentPoly shifted(int e) const;  // q^e * p
  bool in_strictly_negative() const;
  bool in_nonpositive() const;
  // The part supported on negative exponents.
  LaurentPoly negative_part() const;

  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  // this += c * r
  void add_scaled(const LaurentPoly& r, const LaurentPoly& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

// q^L - q^-L; throws std::invalid_argument for L <= 0.
LaurentPoly xi(int weight);

inline LaurentPoly q_power(int e) { return LaurentPoly::monomial(e); }

}  // namespace affcell
