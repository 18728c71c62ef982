#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "decat/blocks.hpp"
#include "decat/crystal.hpp"
#include "decat/fock.hpp"
#include "decat/hecke.hpp"
#include "decat/verify.hpp"

namespace decat::io {

using nlohmann::ordered_json;

ordered_json to_json(const Weight& w);
ordered_json to_json(const SparseIntMatrix& m);
std::string to_csv(const SparseIntMatrix& m);

ordered_json to_json(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);

ordered_json to_json(const Block& b);
ordered_json blocks_to_json(Modulus e, int d, const std::vector<Block>& blocks,
                            const std::vector<std::vector<Block>>& classes);

ordered_json casimir_to_json(const Partition& p, int n, Modulus e);
ordered_json core_to_json(const Partition& p, Modulus e);
ordered_json to_json(const std::vector<Partition>& multiset);
ordered_json to_json(const HeckeElement& x);
ordered_json to_json(const VerifyReport& r, bool timing);

/// Integer coefficients are emitted as JSON numbers when they fit in 64 bits
/// and as decimal strings otherwise.
ordered_json integer_json(const Integer& c);

}  // namespace decat::io
