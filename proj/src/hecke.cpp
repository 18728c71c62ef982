#include "decat/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decat {

Permutation identity_permutation(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Permutation compose(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("permutation rank mismatch");
  Permutation out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = w[static_cast<std::size_t>(v[k] - 1)];
  return out;
}

Permutation simple_transposition(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  Permutation w = identity_permutation(n);
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

int inversion_count(const Permutation& w) {
  int count = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++count;
  return count;
}

std::vector<int> reduced_word(const Permutation& w) {
  Permutation cur = w;
  std::vector<int> reversed;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < cur.size() && cur[k] < cur[k + 1]) ++k;
    if (k + 1 >= cur.size()) break;
    // cur = (cur s_{k+1}) s_{k+1} with one fewer inversion on the left factor.
    reversed.push_back(static_cast<int>(k + 1));
    std::swap(cur[k], cur[k + 1]);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  bool is_identity = true;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] < w[k + 1]) continue;
    is_identity = false;
    Permutation shorter = w;
    std::swap(shorter[k], shorter[k + 1]);
    for (auto word : all_reduced_words(shorter)) {
      word.push_back(static_cast<int>(k + 1));
      out.push_back(std::move(word));
    }
  }
  if (is_identity) out.emplace_back();
  return out;
}

HeckeElement::HeckeElement(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("Hecke algebra rank must be positive");
}

HeckeElement HeckeElement::scalar(const Integer& c, int rank) {
  HeckeElement x(rank);
  x.add_term(std::vector<int>(static_cast<std::size_t>(rank), 0), identity_permutation(rank), c);
  return x;
}

HeckeElement HeckeElement::monomial(std::vector<int> exponents, Permutation w, const Integer& c) {
  HeckeElement x(static_cast<int>(exponents.size()));
  x.add_term(exponents, w, c);
  return x;
}

HeckeElement HeckeElement::y(int index, int rank) { return from_generator(GeneratorKind::Y, index, rank); }

HeckeElement HeckeElement::tau(int index, int rank) { return from_generator(GeneratorKind::Tau, index, rank); }

int HeckeElement::y_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, std::accumulate(key.first.begin(), key.first.end(), 0));
  return d;
}

void HeckeElement::add_term(const std::vector<int>& exponents, const Permutation& w, const Integer& c) {
  if (static_cast<int>(exponents.size()) != rank_ || static_cast<int>(w.size()) != rank_)
    throw std::invalid_argument("term rank does not match element rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{exponents, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void HeckeElement::check_rank(const HeckeElement& other) const {
  if (other.rank_ != rank_)
    throw std::invalid_argument("Hecke rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  check_rank(other);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  check_rank(other);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

HeckeElement from_generator(GeneratorKind kind, int index, int rank) {
  if (rank < 1) throw std::invalid_argument("Hecke algebra rank must be positive");
  std::vector<int> exponents(static_cast<std::size_t>(rank), 0);
  if (kind == GeneratorKind::Y) {
    if (index < 1 || index > rank)
      throw std::invalid_argument("y" + std::to_string(index) + " out of range for rank " + std::to_string(rank));
    exponents[static_cast<std::size_t>(index - 1)] = 1;
    return HeckeElement::monomial(std::move(exponents), identity_permutation(rank));
  }
  if (index < 1 || index >= rank)
    throw std::invalid_argument("t" + std::to_string(index) + " out of range for rank " + std::to_string(rank));
  return HeckeElement::monomial(std::move(exponents), simple_transposition(index, rank));
}

namespace {

// tau_i * y^a, peeling one y factor at a time off the i, i+1 positions:
//   tau_i y_i     = y_{i+1} tau_i - 1
//   tau_i y_{i+1} = y_i tau_i + 1
//   tau_i y_j     = y_j tau_i        (j not in {i, i+1})
HeckeElement tau_times_monomial(int i, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  const auto lo = static_cast<std::size_t>(i - 1);
  const auto hi = static_cast<std::size_t>(i);
  if (a[lo] == 0 && a[hi] == 0) return HeckeElement::monomial(a, simple_transposition(i, n));

  const bool peel_lo = a[lo] > 0;
  std::vector<int> rest = a;
  --rest[peel_lo ? lo : hi];
  const HeckeElement tail = tau_times_monomial(i, rest);

  HeckeElement out(n);
  const std::size_t swapped = peel_lo ? hi : lo;
  for (const auto& [key, c] : tail.terms()) {
    auto exps = key.first;
    ++exps[swapped];
    out.add_term(exps, key.second, c);
  }
  out.add_term(rest, identity_permutation(n), peel_lo ? Integer(-1) : Integer(1));
  return out;
}

}  // namespace

HeckeElement left_multiply_tau(int i, const HeckeElement& x) {
  const int n = x.rank();
  if (i < 1 || i >= n) throw std::invalid_argument("t" + std::to_string(i) + " out of range for rank " + std::to_string(n));
  HeckeElement out(n);
  for (const auto& [key, c] : x.terms()) {
    const HeckeElement moved = tau_times_monomial(i, key.first);
    for (const auto& [k2, c2] : moved.terms()) out.add_term(k2.first, compose(k2.second, key.second), c * c2);
  }
  return out;
}

HeckeElement straighten(const std::vector<int>& word, const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  HeckeElement x = HeckeElement::monomial(exponents, identity_permutation(n));
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply_tau(*it, x);
  return x;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("Hecke rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  const int n = a.rank();
  HeckeElement out(n);
  for (const auto& [ka, ca] : a.terms()) {
    const auto word = reduced_word(ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      // y^p w y^q v = y^p (w y^q) v
      const HeckeElement middle = straighten(word, kb.first);
      for (const auto& [km, cm] : middle.terms()) {
        auto exps = km.first;
        for (std::size_t k = 0; k < exps.size(); ++k) exps[k] += ka.first[k];
        out.add_term(exps, compose(km.second, kb.second), ca * cb * cm);
      }
    }
  }
  return out;
}

std::string to_string(const HeckeElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t k = 0; k < key.first.size(); ++k) {
      if (key.first[k] == 0) continue;
      os << "*y" << (k + 1);
      if (key.first[k] > 1) os << "^" << key.first[k];
    }
    if (key.second != identity_permutation(x.rank())) {
      os << "*[";
      for (std::size_t k = 0; k < key.second.size(); ++k) os << (k ? "," : "") << key.second[k];
      os << "]";
    }
  }
  return os.str();
}

std::vector<RelationCheck> verify_relations(int rank) {
  if (rank < 2) throw std::invalid_argument("relation check needs rank >= 2");
  const int n = rank;
  auto y = [n](int i) { return HeckeElement::y(i, n); };
  auto t = [n](int i) { return HeckeElement::tau(i, n); };
  const HeckeElement one = HeckeElement::scalar(1, n);

  std::vector<RelationCheck> out;
  auto check = [&](std::string name, auto&& body) {
    RelationCheck rc{std::move(name), true, {}};
    body(rc);
    out.push_back(std::move(rc));
  };
  auto fail = [](RelationCheck& rc, const std::string& what) {
    if (rc.passed) rc.detail = what;
    rc.passed = false;
  };

  check("tau_i^2 = 1", [&](RelationCheck& rc) {
    for (int i = 1; i < n; ++i)
      if (t(i) * t(i) != one) fail(rc, "i=" + std::to_string(i));
  });
  check("tau_i tau_j = tau_j tau_i (|i-j| > 1)", [&](RelationCheck& rc) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (t(i) * t(j) != t(j) * t(i)) fail(rc, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
  });
  check("tau_i tau_{i+1} tau_i = tau_{i+1} tau_i tau_{i+1}", [&](RelationCheck& rc) {
    for (int i = 1; i + 1 < n; ++i)
      if (t(i) * t(i + 1) * t(i) != t(i + 1) * t(i) * t(i + 1)) fail(rc, "i=" + std::to_string(i));
  });
  check("tau_i y_j = y_j tau_i (j not in {i, i+1})", [&](RelationCheck& rc) {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1 && t(i) * y(j) != y(j) * t(i))
          fail(rc, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
  });
  check("tau_i y_{i+1} - y_i tau_i = 1", [&](RelationCheck& rc) {
    for (int i = 1; i < n; ++i)
      if (t(i) * y(i + 1) - y(i) * t(i) != one) fail(rc, "i=" + std::to_string(i));
  });
  check("y_i y_j = y_j y_i", [&](RelationCheck& rc) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (y(i) * y(j) != y(j) * y(i)) fail(rc, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
  });
  return out;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  HeckeElement parse() {
    HeckeElement x = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected token");
    return x;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && end - pos_ < 8) ++end;
    const std::string token = pos_ < text_.size() ? std::string(text_.substr(pos_, std::max<std::size_t>(1, end - pos_)))
                                                   : std::string("<end>");
    throw std::invalid_argument("bad expression: " + what + " at position " + std::to_string(pos_) + " ('" + token + "')");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  HeckeElement expression() {
    HeckeElement x = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        x += term();
      } else if (c == '-') {
        ++pos_;
        x -= term();
      } else {
        return x;
      }
    }
  }

  HeckeElement term() {
    HeckeElement x = factor();
    while (peek() == '*') {
      ++pos_;
      x = multiply(x, factor());
    }
    return x;
  }

  int integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ - start > 9) {
      pos_ = start;
      error("index too large");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  HeckeElement factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return Integer(-1) * factor();
    }
    if (c == '(') {
      ++pos_;
      HeckeElement x = expression();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return HeckeElement::scalar(Integer(std::string(text_.substr(start, pos_ - start))), rank_);
    }
    if (c == 'y' || c == 't') {
      const std::size_t start = pos_;
      ++pos_;
      const int index = integer_literal();
      const auto kind = c == 'y' ? GeneratorKind::Y : GeneratorKind::Tau;
      const int upper = c == 'y' ? rank_ : rank_ - 1;
      if (index < 1 || index > upper) {
        pos_ = start;
        error("generator index out of range for rank " + std::to_string(rank_));
      }
      return from_generator(kind, index, rank_);
    }
    error(c == '\0' ? "unexpected end of input" : "unexpected token");
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

HeckeElement parse_hecke_expression(std::string_view text, int rank) {
  if (rank < 1) throw std::invalid_argument("Hecke algebra rank must be positive");
  return ExpressionParser(text, rank).parse();
}

}  // namespace decat
