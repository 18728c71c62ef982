#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decat/integer.hpp"

namespace decat {

/// One-line notation [w(1), ..., w(n)]. Composition w * v applies v first.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& w, const Permutation& v);
Permutation simple_transposition(int i, int n);
int inversion_count(const Permutation& w);

/// A reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Permutation& w);
/// Every reduced word of w.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// Element of the degenerate affine Hecke algebra in normal form
/// sum c * y^a * w (polynomial part on the left).
class HeckeElement {
 public:
  using Key = std::pair<std::vector<int>, Permutation>;
  using Terms = std::map<Key, Integer>;

  explicit HeckeElement(int rank);

  static HeckeElement scalar(const Integer& c, int rank);
  static HeckeElement monomial(std::vector<int> exponents, Permutation w, const Integer& c = 1);
  static HeckeElement y(int index, int rank);
  static HeckeElement tau(int index, int rank);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int y_degree() const;

  void add_term(const std::vector<int>& exponents, const Permutation& w, const Integer& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& operator*=(const Integer& c);

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Integer& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  void check_rank(const HeckeElement& other) const;

  int rank_;
  Terms terms_;
};

enum class GeneratorKind { Y, Tau };

/// y_i (1 <= i <= n) or tau_i (1 <= i <= n - 1); out-of-range indices throw.
HeckeElement from_generator(GeneratorKind kind, int index, int rank);

/// tau_i * x, straightened with the defining relations.
HeckeElement left_multiply_tau(int i, const HeckeElement& x);

/// tau_{word[0]} * ... * tau_{word[k-1]} * y^exponents in normal form.
HeckeElement straighten(const std::vector<int>& word, const std::vector<int>& exponents);

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

std::string to_string(const HeckeElement& x);

struct RelationCheck {
  std::string name;
  bool passed;
  std::string detail;  // first failing instance, empty on success
};

/// Checks braid relations, tau_i^2 = 1, the commuting relations, the cross
/// relation tau_i y_{i+1} - y_i tau_i = 1, and y_i y_j = y_j y_i.
std::vector<RelationCheck> verify_relations(int rank);

/// Parses expressions built from y<k>, t<k>, integer literals, '*', '+',
/// '-' and parentheses. Throws std::invalid_argument naming the offending token.
HeckeElement parse_hecke_expression(std::string_view text, int rank);

}  // namespace decat
