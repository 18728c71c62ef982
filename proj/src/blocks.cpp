#include "decat/blocks.hpp"

#include <map>
#include <stdexcept>

namespace decat {

std::vector<Block> blocks(int d, Modulus e) {
  std::map<Partition, std::vector<Partition>, GradedLess> by_core;
  for (const Partition& p : partitions_of(d)) by_core[p_core(p, e)].push_back(p);
  std::vector<Block> out;
  for (auto& [core, members] : by_core) {
    const int pw = e.is_infinite() ? 0 : (d - core.size()) / e.value();
    Weight w = weight(members.front(), e);
    out.push_back(Block{e, d, core, std::move(members), std::move(w), pw});
  }
  return out;
}

bool same_block(const Partition& a, const Partition& b, Modulus e) {
  if (a.size() != b.size())
    throw std::invalid_argument("same_block needs partitions of equal size: " + to_string(a) + " vs " +
                                to_string(b));
  return p_core(a, e) == p_core(b, e);
}

namespace {

std::vector<std::vector<Block>> group_by_p_weight(std::vector<Block> all) {
  std::map<int, std::vector<Block>> grouped;
  for (auto& b : all) grouped[b.p_weight].push_back(std::move(b));
  std::vector<std::vector<Block>> out;
  for (auto& [pw, group] : grouped) out.push_back(std::move(group));
  return out;
}

}  // namespace

std::vector<std::vector<Block>> derived_equivalence_classes(int d, Modulus e) {
  return group_by_p_weight(blocks(d, e));
}

std::vector<std::vector<Block>> derived_equivalence_classes_up_to(int d, Modulus e) {
  std::vector<Block> all;
  for (int k = 0; k <= d; ++k) {
    auto layer = blocks(k, e);
    all.insert(all.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return group_by_p_weight(std::move(all));
}

}  // namespace decat
