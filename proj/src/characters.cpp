#include "decat/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decat {

SymPolynomial::SymPolynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative number of variables");
}

SymPolynomial::SymPolynomial(int num_vars, Terms terms) : SymPolynomial(num_vars) {
  for (auto& [a, c] : terms) {
    if (static_cast<int>(a.size()) != num_vars)
      throw std::invalid_argument("exponent vector length does not match number of variables");
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
      throw std::invalid_argument("negative exponent");
    add(a, c);
  }
  if (!symmetric(num_vars_, terms_)) throw std::invalid_argument("polynomial is not symmetric");
}

SymPolynomial SymPolynomial::constant(int num_vars, const Integer& c) {
  SymPolynomial f(num_vars);
  f.add(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return f;
}

bool SymPolynomial::symmetric(int num_vars, const Terms& terms) {
  for (int k = 0; k + 1 < num_vars; ++k) {
    for (const auto& [a, c] : terms) {
      Exponents swapped = a;
      std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k + 1)]);
      const auto it = terms.find(swapped);
      if (it == terms.end() || it->second != c) return false;
    }
  }
  return true;
}

void SymPolynomial::add(const Exponents& a, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SymPolynomial::coefficient(const Exponents& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

int SymPolynomial::degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, std::accumulate(a.begin(), a.end(), 0));
  return d;
}

const Exponents& SymPolynomial::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading exponent");
  return terms_.rbegin()->first;
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [a, c] : other.terms_) add(a, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [a, c] : other.terms_) add(a, -c);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, coeff] : terms_) coeff *= c;
  return *this;
}

SymPolynomial operator*(const SymPolynomial& f, const SymPolynomial& g) {
  if (f.num_vars_ != g.num_vars_) throw std::invalid_argument("variable count mismatch");
  SymPolynomial out(f.num_vars_);
  Exponents sum(static_cast<std::size_t>(f.num_vars_));
  for (const auto& [a, c] : f.terms_) {
    for (const auto& [b, d] : g.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a[k] + b[k];
      out.add(sum, c * d);
    }
  }
  return out;
}

std::string to_string(const SymPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [a, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Integer mag = c < 0 ? Integer(-c) : c;
    const bool constant_term = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
    if (mag != 1 || constant_term) os << mag;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      os << "x" << (k + 1);
      if (a[k] > 1) os << "^" << a[k];
    }
  }
  return os.str();
}

SymPolynomial schur(const Partition& p, int n) {
  if (n < 0) throw std::invalid_argument("negative number of variables");
  SymPolynomial::Terms terms;
  if (p.length() > n) return SymPolynomial(n);
  const auto cells = p.boxes();  // row-major
  std::vector<std::vector<int>> tableau(static_cast<std::size_t>(p.length()));
  for (int k = 1; k <= p.length(); ++k) tableau[static_cast<std::size_t>(k - 1)].assign(static_cast<std::size_t>(p.row(k)), 0);
  Exponents content_vector(static_cast<std::size_t>(n), 0);

  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      terms[content_vector] += 1;
      return;
    }
    const auto r = static_cast<std::size_t>(cells[idx].row - 1);
    const auto c = static_cast<std::size_t>(cells[idx].col - 1);
    int lo = 1;
    if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
    if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      tableau[r][c] = v;
      ++content_vector[static_cast<std::size_t>(v - 1)];
      self(self, idx + 1);
      --content_vector[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(fill, 0);
  return SymPolynomial(n, std::move(terms));
}

SymPolynomial last_var_coefficient(const SymPolynomial& f, int k) {
  if (f.num_vars() < 1) throw std::invalid_argument("polynomial has no variables");
  SymPolynomial::Terms terms;
  for (const auto& [a, c] : f.terms()) {
    if (a.back() != k) continue;
    terms.emplace(Exponents(a.begin(), a.end() - 1), c);
  }
  return SymPolynomial(f.num_vars() - 1, std::move(terms));
}

SymPolynomial restrict_last_var(const SymPolynomial& f) { return last_var_coefficient(f, 0); }

std::map<Partition, Integer, GradedLess> schur_expansion(const SymPolynomial& f) {
  std::map<Partition, Integer, GradedLess> out;
  SymPolynomial rest = f;
  while (!rest.is_zero()) {
    const Exponents lead = rest.leading_exponents();
    std::vector<int> parts;
    for (int x : lead)
      if (x > 0) parts.push_back(x);
    // For a symmetric polynomial the lexicographic leader is weakly decreasing.
    const Partition mu(parts);
    const Integer c = rest.coefficient(lead);
    rest -= c * schur(mu, f.num_vars());
    out.emplace(mu, c);
  }
  return out;
}

std::vector<Partition> as_multiset(const std::map<Partition, Integer, GradedLess>& expansion) {
  std::vector<Partition> out;
  for (const auto& [mu, c] : expansion) {
    if (c < 0) throw std::logic_error("negative Schur coefficient for " + to_string(mu));
    for (Integer k = 0; k < c; ++k) out.push_back(mu);
  }
  return out;
}

std::vector<Partition> restriction_expansion(const Partition& p, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return as_multiset(schur_expansion(last_var_coefficient(schur(p, n + 1), 1)));
}

std::vector<Partition> pieri_expansion(const Partition& p, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return as_multiset(schur_expansion(schur(Partition{1}, n) * schur(p, n)));
}

std::vector<Partition> branch_r1(const Partition& p, int n) {
  if (n < p.size())
    throw std::invalid_argument("branch needs n >= |lambda| (n = " + std::to_string(n) + ", |lambda| = " +
                                std::to_string(p.size()) + ")");
  return restriction_expansion(p, n);
}

std::vector<Partition> pieri_mult(const Partition& p, int n) {
  if (n < p.length() + 1)
    throw std::invalid_argument("pieri needs n >= length(lambda) + 1 (n = " + std::to_string(n) +
                                ", length = " + std::to_string(p.length()) + ")");
  return pieri_expansion(p, n);
}

}  // namespace decat
