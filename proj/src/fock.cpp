#include "decat/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace decat {

Integer FockVector::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FockVector::add_term(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*v" << to_string(p);
  }
  return os.str();
}

Weight::Weight(Modulus e, std::map<long, long> alpha_mult) : modulus_(e) {
  for (const auto& [i, m] : alpha_mult) {
    if (m < 0) throw std::invalid_argument("negative alpha multiplicity");
    if (m != 0) alpha_mult_.emplace(Residue(i, e).value(), 0).first->second += m;
  }
}

long Weight::multiplicity(long residue) const {
  const auto it = alpha_mult_.find(Residue(residue, modulus_).value());
  return it == alpha_mult_.end() ? 0 : it->second;
}

Weight Weight::minus_alpha(const Residue& i) const {
  auto m = alpha_mult_;
  ++m[i.value()];
  return Weight(modulus_, std::move(m));
}

Weight Weight::plus_alpha(const Residue& i) const {
  auto m = alpha_mult_;
  if (--m[i.value()] < 0) throw std::invalid_argument("weight has no alpha_" + std::to_string(i.value()) + " to remove");
  return Weight(modulus_, std::move(m));
}

long Weight::pairing(const Residue& i) const {
  long value = (i.value() == 0) ? 1 : 0;
  for (const auto& [j, m] : alpha_mult_) value -= m * cartan_entry(i, Residue(j, modulus_));
  return value;
}

long cartan_entry(const Residue& i, const Residue& j) {
  if (i.modulus() != j.modulus()) throw std::invalid_argument("residue modulus does not match");
  const int e = i.modulus().value();
  if (i == j) return 2;
  if (e == 2) return -2;
  long diff = i.value() - j.value();
  if (e > 0) diff = Residue(diff, i.modulus()).value();
  const bool adjacent = e == 0 ? (diff == 1 || diff == -1) : (diff == 1 || diff == e - 1);
  return adjacent ? -1 : 0;
}

FockVector apply_f(const FockVector& v, const Residue& i) {
  FockVector out;
  for (const auto& [p, c] : v.terms())
    for (const Box& b : addable_boxes(p))
      if (residue(b, i.modulus()) == i) out.add_term(add_box(p, b), c);
  return out;
}

FockVector apply_e(const FockVector& v, const Residue& i) {
  FockVector out;
  for (const auto& [p, c] : v.terms())
    for (const Box& b : removable_boxes(p))
      if (residue(b, i.modulus()) == i) out.add_term(remove_box(p, b), c);
  return out;
}

FockVector apply_h(const FockVector& v, const Residue& i) {
  FockVector out;
  for (const auto& [p, c] : v.terms()) out.add_term(p, c * n_value(p, i));
  return out;
}

Weight weight(const Partition& p, Modulus e) {
  std::map<long, long> m;
  for (const Box& b : p.boxes()) ++m[residue(b, e).value()];
  return Weight(e, std::move(m));
}

std::vector<Residue> active_residues(Modulus e, int d) {
  std::vector<Residue> out;
  if (e.is_infinite()) {
    for (long i = -d - 1; i <= d + 1; ++i) out.emplace_back(i, e);
  } else {
    for (long i = 0; i < e.value(); ++i) out.emplace_back(i, e);
  }
  return out;
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& entry : entries)
    if (entry.row == r && entry.col == c) return entry.value;
  return 0;
}

namespace {

template <typename Apply>
SparseIntMatrix assemble(int d, int target_degree, Apply&& apply) {
  SparseIntMatrix m;
  m.cols = partitions_of(d);
  if (target_degree >= 0) m.rows = partitions_of(target_degree);
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    const FockVector image = apply(FockVector::basis(m.cols[c]));
    std::vector<SparseIntMatrix::Entry> column;
    for (const auto& [p, coeff] : image.terms()) {
      const auto it = std::lower_bound(m.rows.begin(), m.rows.end(), p,
                                       [](const Partition& a, const Partition& b) { return b < a; });
      if (it == m.rows.end() || *it != p) throw std::logic_error("operator image outside target degree");
      column.push_back({static_cast<std::size_t>(it - m.rows.begin()), c, coeff});
    }
    std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    m.entries.insert(m.entries.end(), column.begin(), column.end());
  }
  return m;
}

}  // namespace

SparseIntMatrix op_matrix(OpKind kind, const Residue& i, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  switch (kind) {
    case OpKind::E:
      return assemble(d, d - 1, [&](const FockVector& v) { return apply_e(v, i); });
    case OpKind::F:
      return assemble(d, d + 1, [&](const FockVector& v) { return apply_f(v, i); });
    case OpKind::H:
      return assemble(d, d, [&](const FockVector& v) { return apply_h(v, i); });
  }
  throw std::invalid_argument("unknown operator kind");
}

SparseIntMatrix total_f_matrix(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  return assemble(d, d + 1, [](const FockVector& v) {
    FockVector out;
    for (const auto& [p, c] : v.terms())
      for (const Box& b : addable_boxes(p)) out.add_term(add_box(p, b), c);
    return out;
  });
}

}  // namespace decat
