#include "decat/crystal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace decat {

namespace {

bool rim_before(const Box& a, const Box& b) {
  if (a.row != b.row) return a.row > b.row;
  return a.col < b.col;
}

}  // namespace

std::string Signature::word() const {
  std::string out;
  for (const auto& s : symbols) out += s.sign;
  return out;
}

Signature signature(const Partition& p, const Residue& i) {
  Signature s;
  for (const Box& b : addable_boxes(p))
    if (residue(b, i.modulus()) == i) s.symbols.push_back({'+', b});
  for (const Box& b : removable_boxes(p))
    if (residue(b, i.modulus()) == i) s.symbols.push_back({'-', b});
  std::sort(s.symbols.begin(), s.symbols.end(),
            [](const SignedBox& a, const SignedBox& b) { return rim_before(a.box, b.box); });
  return s;
}

Signature reduced_signature(const Signature& s) {
  // Unmatched '-' symbols are final as soon as they are emitted, since
  // everything to their left is already a '-'.
  std::vector<SignedBox> minus;
  std::vector<SignedBox> plus;
  for (const auto& sym : s.symbols) {
    if (sym.sign == '+') {
      plus.push_back(sym);
    } else if (sym.sign == '-') {
      if (plus.empty())
        minus.push_back(sym);
      else
        plus.pop_back();
    } else {
      throw std::invalid_argument("signature symbol must be '+' or '-'");
    }
  }
  Signature out;
  out.symbols = std::move(minus);
  out.symbols.insert(out.symbols.end(), plus.begin(), plus.end());
  return out;
}

std::optional<Box> good_box(const Partition& p, const Residue& i) {
  const Signature r = reduced_signature(signature(p, i));
  std::optional<Box> out;
  for (const auto& sym : r.symbols)
    if (sym.sign == '-') out = sym.box;
  return out;
}

std::optional<Box> cogood_box(const Partition& p, const Residue& i) {
  const Signature r = reduced_signature(signature(p, i));
  for (const auto& sym : r.symbols)
    if (sym.sign == '+') return sym.box;
  return std::nullopt;
}

std::optional<Partition> e_tilde(const Partition& p, const Residue& i) {
  if (const auto b = good_box(p, i)) return remove_box(p, *b);
  return std::nullopt;
}

std::optional<Partition> f_tilde(const Partition& p, const Residue& i) {
  if (const auto b = cogood_box(p, i)) return add_box(p, *b);
  return std::nullopt;
}

int epsilon(const Partition& p, const Residue& i) {
  const auto w = reduced_signature(signature(p, i)).word();
  return static_cast<int>(std::count(w.begin(), w.end(), '-'));
}

int phi(const Partition& p, const Residue& i) {
  const auto w = reduced_signature(signature(p, i)).word();
  return static_cast<int>(std::count(w.begin(), w.end(), '+'));
}

CrystalGraph crystal_graph(Modulus e, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  CrystalGraph g;
  g.modulus = e;
  g.max_size = d;
  g.nodes = partitions_up_to(d);
  for (const Partition& p : g.nodes) {
    if (p.size() == d) continue;
    std::set<long> residues;
    for (const Box& b : addable_boxes(p)) residues.insert(residue(b, e).value());
    for (long i : residues)
      if (auto target = f_tilde(p, Residue(i, e))) g.edges.push_back({p, std::move(*target), i});
  }
  return g;
}

}  // namespace decat
