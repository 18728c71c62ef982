#pragma once

#include <map>
#include <string>
#include <vector>

#include "decat/integer.hpp"
#include "decat/partition.hpp"

namespace decat {

using Exponents = std::vector<int>;

/// Symmetric polynomial in a fixed number of variables with integer coefficients.
///
/// Construction rejects exponent vectors of the wrong length and input that
/// is not invariant under adjacent variable swaps.
class SymPolynomial {
 public:
  using Terms = std::map<Exponents, Integer>;

  explicit SymPolynomial(int num_vars);
  SymPolynomial(int num_vars, Terms terms);

  static SymPolynomial constant(int num_vars, const Integer& c);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& a) const;
  int degree() const;

  /// Lexicographically greatest exponent vector; requires a nonzero polynomial.
  const Exponents& leading_exponents() const;

  SymPolynomial& operator+=(const SymPolynomial& other);
  SymPolynomial& operator-=(const SymPolynomial& other);
  SymPolynomial& operator*=(const Integer& c);

  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
  friend SymPolynomial operator*(const Integer& c, SymPolynomial a) { return a *= c; }
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

 private:
  static bool symmetric(int num_vars, const Terms& terms);
  void add(const Exponents& a, const Integer& c);

  int num_vars_;
  Terms terms_;
};

std::string to_string(const SymPolynomial& f);

/// Schur polynomial s_lambda(x_1..x_n) by semistandard tableau enumeration;
/// zero when lambda has more than n rows.
SymPolynomial schur(const Partition& p, int n);

/// Sets x_n = 0.
SymPolynomial restrict_last_var(const SymPolynomial& f);

/// Coefficient of x_n^k, as a polynomial in the first n - 1 variables.
SymPolynomial last_var_coefficient(const SymPolynomial& f, int k);

/// Schur-basis coefficients of a symmetric polynomial, by repeatedly
/// subtracting the Schur polynomial of the leading exponent.
std::map<Partition, Integer, GradedLess> schur_expansion(const SymPolynomial& f);

/// Multiset of partitions (with repeats) in graded order. Throws
/// std::logic_error on a negative coefficient.
std::vector<Partition> as_multiset(const std::map<Partition, Integer, GradedLess>& expansion);

/// Schur expansion of the t^1 coefficient of s_lambda(x_1..x_n, t), no
/// precondition on n (terms with more than n rows vanish).
std::vector<Partition> restriction_expansion(const Partition& p, int n);
/// Schur expansion of s_(1) s_lambda in n variables, no precondition on n.
std::vector<Partition> pieri_expansion(const Partition& p, int n);

/// restriction_expansion with n >= |lambda| enforced.
std::vector<Partition> branch_r1(const Partition& p, int n);
/// pieri_expansion with n >= length(lambda) + 1 enforced, so every addable box fits.
std::vector<Partition> pieri_mult(const Partition& p, int n);

}  // namespace decat
