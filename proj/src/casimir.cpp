#include "decat/casimir.hpp"

#include <stdexcept>
#include <string>

namespace decat {

namespace {

long checked_half(std::int64_t twice, const Box& b, const char* what) {
  if (twice % 2 != 0)
    throw std::logic_error(std::string(what) + ": odd Casimir difference at box " + to_string(b));
  const long value = static_cast<long>(twice / 2);
  if (value != content(b))
    throw std::logic_error(std::string(what) + ": eigenvalue " + std::to_string(value) +
                           " differs from content of box " + to_string(b));
  return value;
}

}  // namespace

std::int64_t casimir_scalar(const Partition& p, int n) {
  if (n < p.length())
    throw std::invalid_argument("n = " + std::to_string(n) + " is smaller than the length of " + to_string(p));
  std::int64_t total = 0;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t part = p.row(i);
    total += (static_cast<std::int64_t>(n) - 2 * i + 1) * part + part * part;
  }
  return total;
}

Residue x_eigenvalue(const Partition& p, const Box& removable, int n, Modulus e) {
  if (n < p.size())
    throw std::invalid_argument("x_eigenvalue needs n >= |lambda|");
  const Partition smaller = remove_box(p, removable);
  const std::int64_t twice = casimir_scalar(p, n + 1) - casimir_scalar(smaller, n) - p.size() - n;
  return Residue(checked_half(twice, removable, "x_eigenvalue"), e);
}

Residue y_eigenvalue(const Partition& p, const Box& addable, int n, Modulus e) {
  if (n < p.size() + 1 || n < addable.row)
    throw std::invalid_argument("y_eigenvalue needs n >= |lambda| + 1 and n >= row of the box");
  const Partition larger = add_box(p, addable);
  // c_n of the standard module (1) is n.
  const std::int64_t twice = casimir_scalar(larger, n) - casimir_scalar(p, n) - n;
  return Residue(checked_half(twice, addable, "y_eigenvalue"), e);
}

std::vector<EigenvalueRow> eigenvalue_table(const Partition& p, int n, Modulus e) {
  std::vector<EigenvalueRow> rows;
  if (n >= p.size()) {
    for (const Box& b : removable_boxes(p))
      rows.push_back({b, false, content(b), x_eigenvalue(p, b, n, e)});
  }
  if (n >= p.size() + 1) {
    for (const Box& b : addable_boxes(p))
      if (n >= b.row) rows.push_back({b, true, content(b), y_eigenvalue(p, b, n, e)});
  }
  return rows;
}

}  // namespace decat
