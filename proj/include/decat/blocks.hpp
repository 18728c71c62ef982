#pragma once

#include <vector>

#include "decat/fock.hpp"
#include "decat/partition.hpp"

namespace decat {

/// Partitions of one degree sharing a p-core (equivalently, a weight).
struct Block {
  Modulus modulus;
  int degree = 0;
  Partition core;
  std::vector<Partition> members;  // lexicographically descending
  Weight weight;
  int p_weight = 0;
};

/// Blocks of Lambda_d keyed by p-core, sorted by core in graded order.
std::vector<Block> blocks(int d, Modulus e);

/// Throws std::invalid_argument when the sizes differ.
bool same_block(const Partition& a, const Partition& b, Modulus e);

/// Blocks of Lambda_d grouped by p-weight, ascending.
std::vector<std::vector<Block>> derived_equivalence_classes(int d, Modulus e);

/// Blocks of every degree <= d grouped by p-weight, ascending.
std::vector<std::vector<Block>> derived_equivalence_classes_up_to(int d, Modulus e);

}  // namespace decat
