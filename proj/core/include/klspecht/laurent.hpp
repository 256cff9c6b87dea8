#pragma once

// Exact Laurent polynomials in one variable q with integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace klspecht {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1].  Stored sparsely as exponent -> coefficient with
/// zero coefficients never present, so structural equality is ring equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coeff, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1);

  /// Parses the format produced by to_string(), e.g. "q^2+2-3q^-1".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int exponent) const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  /// Substitution q -> q^-1.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }

  Integer eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Highest exponent first, e.g. "q^2+q", "-q^-1", "1", "0".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& coeff);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// a = gamma + strict with gamma bar-invariant.
struct SymmetricSplit {
  LaurentPoly gamma;
  LaurentPoly strict;
};

/// strict lies in qZ[q]; gamma is built from the non-positive exponents of a:
/// gamma = a_0 + sum_{k<0} a_k (q^k + q^-k).
SymmetricSplit split_symmetric(const LaurentPoly& a);

/// Mirror image: strict lies in q^-1 Z[q^-1].
SymmetricSplit split_symmetric_negative(const LaurentPoly& a);

}  // namespace klspecht
