#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decat/partition.hpp"

namespace decat {

struct SignedBox {
  char sign;  // '+' addable, '-' removable
  Box box;

  friend bool operator==(const SignedBox&, const SignedBox&) = default;
};

/// +/- word along the rim, bottom left to top right.
struct Signature {
  std::vector<SignedBox> symbols;

  std::string word() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Partition& p, const Residue& i);

/// Cancels adjacent "+-" pairs with a single stack scan; the result reads -^a +^b.
Signature reduced_signature(const Signature& s);

std::optional<Box> good_box(const Partition& p, const Residue& i);
std::optional<Box> cogood_box(const Partition& p, const Residue& i);

std::optional<Partition> e_tilde(const Partition& p, const Residue& i);
std::optional<Partition> f_tilde(const Partition& p, const Residue& i);

int epsilon(const Partition& p, const Residue& i);
int phi(const Partition& p, const Residue& i);

struct CrystalEdge {
  Partition source;
  Partition target;
  long residue;

  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  Modulus modulus;
  int max_size = 0;
  std::vector<Partition> nodes;   // graded order
  std::vector<CrystalEdge> edges;  // sorted by (source, residue)
};

CrystalGraph crystal_graph(Modulus e, int d);

}  // namespace decat
