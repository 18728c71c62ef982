#include "decat/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace decat::oracle {

Partition abacus_core(const Partition& p, int e) {
  if (e < 2) throw std::invalid_argument("abacus needs e >= 2");
  const int beads = p.length();
  std::vector<int> per_runner(static_cast<std::size_t>(e), 0);
  for (int k = 1; k <= beads; ++k) ++per_runner[static_cast<std::size_t>((p.row(k) - k + beads) % e)];
  std::vector<int> positions;
  for (int r = 0; r < e; ++r)
    for (int j = 0; j < per_runner[static_cast<std::size_t>(r)]; ++j) positions.push_back(r + j * e);
  std::sort(positions.rbegin(), positions.rend());
  std::vector<int> parts;
  for (int k = 1; k <= beads; ++k) {
    const int part = positions[static_cast<std::size_t>(k - 1)] - (beads - k);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> rim_hook_remainders(const Partition& p, int length) {
  std::vector<Partition> out;
  if (length < 1 || length > p.size()) return out;
  for (const Partition& mu : partitions_of(p.size() - length)) {
    bool inside = mu.length() <= p.length();
    for (int k = 1; inside && k <= mu.length(); ++k) inside = mu.row(k) <= p.row(k);
    if (!inside) continue;

    std::vector<Box> skew;
    for (const Box& b : p.boxes())
      if (!mu.contains(b)) skew.push_back(b);
    auto in_skew = [&](int k, int l) {
      return std::find(skew.begin(), skew.end(), Box{k, l}) != skew.end();
    };

    bool square = false;
    for (const Box& b : skew)
      if (in_skew(b.row + 1, b.col) && in_skew(b.row, b.col + 1) && in_skew(b.row + 1, b.col + 1)) square = true;
    if (square) continue;

    std::vector<bool> seen(skew.size(), false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const Box cur = skew[frontier.front()];
      frontier.pop();
      for (std::size_t j = 0; j < skew.size(); ++j) {
        if (seen[j]) continue;
        if (std::abs(skew[j].row - cur.row) + std::abs(skew[j].col - cur.col) == 1) {
          seen[j] = true;
          ++reached;
          frontier.push(j);
        }
      }
    }
    if (reached == skew.size()) out.push_back(mu);
  }
  return out;
}

std::set<Partition> terminal_cores(const Partition& p, int e) {
  std::map<Partition, std::set<Partition>> memo;
  auto rec = [&](auto&& self, const Partition& q) -> const std::set<Partition>& {
    if (auto it = memo.find(q); it != memo.end()) return it->second;
    std::set<Partition> result;
    const auto next = rim_hook_remainders(q, e);
    if (next.empty()) result.insert(q);
    for (const Partition& r : next) {
      const auto& sub = self(self, r);
      result.insert(sub.begin(), sub.end());
    }
    return memo.emplace(q, std::move(result)).first->second;
  };
  return rec(rec, p);
}

std::set<std::string> all_signature_reductions(const std::string& word) {
  std::set<std::string> out;
  bool reducible = false;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] == '+' && word[k + 1] == '-') {
      reducible = true;
      const auto sub = all_signature_reductions(word.substr(0, k) + word.substr(k + 2));
      out.insert(sub.begin(), sub.end());
    }
  }
  if (!reducible) out.insert(word);
  return out;
}

SymPolynomial complete_homogeneous(int k, int n) {
  if (k < 0) return SymPolynomial(n);
  SymPolynomial::Terms terms;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == a.size() || a.empty()) {
      if (a.empty()) {
        if (remaining == 0) terms.emplace(a, 1);
        return;
      }
      a[pos] = remaining;
      terms.emplace(a, 1);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      a[pos] = x;
      self(self, pos + 1, remaining - x);
    }
  };
  rec(rec, 0, k);
  return SymPolynomial(n, std::move(terms));
}

SymPolynomial jacobi_trudi(const Partition& p, int n) {
  const int len = p.length();
  if (len == 0) return SymPolynomial::constant(n, 1);
  std::vector<int> sigma(static_cast<std::size_t>(len));
  std::iota(sigma.begin(), sigma.end(), 0);
  SymPolynomial det(n);
  do {
    int inversions = 0;
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b)
        if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inversions;
    SymPolynomial term = SymPolynomial::constant(n, inversions % 2 == 0 ? 1 : -1);
    for (int r = 0; r < len && !term.is_zero(); ++r) {
      const int c = sigma[static_cast<std::size_t>(r)];
      term = term * complete_homogeneous(p.row(r + 1) - (r + 1) + (c + 1), n);
    }
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

HeckeElement tau_times_monomial_closed_form(int i, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  const auto lo = static_cast<std::size_t>(i - 1);
  const auto hi = static_cast<std::size_t>(i);
  std::vector<int> swapped = a;
  std::swap(swapped[lo], swapped[hi]);
  HeckeElement out = HeckeElement::monomial(swapped, simple_transposition(i, n));

  const int p = a[lo];
  const int q = a[hi];
  if (p == q) return out;
  const int m = std::min(p, q);
  const int d = std::abs(p - q);
  const Integer sign = q > p ? 1 : -1;
  for (int k = 0; k < d; ++k) {
    std::vector<int> b = a;
    b[hi] = m + k;
    b[lo] = m + d - 1 - k;
    out.add_term(b, identity_permutation(n), sign);
  }
  return out;
}

}  // namespace decat::oracle
