#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decat/partition.hpp"

namespace decat {

/// Outcome of one property check. A failing check always carries the first
/// counterexample found.
struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = true;
  std::string counterexample;
  long instances = 0;
  double elapsed_ms = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> suites;  // sorted by name
  bool passed() const;
};

constexpr std::uint64_t kDefaultSeed = 20240917;

// Individual property checks. Each runs exhaustively over the stated range.

/// (e_i f_j - f_j e_i) v = delta_ij n_i v on |lambda| <= d.
CheckResult check_commutators(Modulus e, int d);
/// [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j, Cartan pairing and weight ladder.
CheckResult check_cartan(Modulus e, int d);
/// ad(e_i)^{1-a_ij} e_j and ad(f_i)^{1-a_ij} f_j annihilate v on |lambda| <= d.
CheckResult check_serre(Modulus e, int d);
/// f_i^N v = 0 for N = 1 + #addable i-boxes, and f_i^{N-1} v != 0.
CheckResult check_integrability(Modulus e, int d);
/// E matrices are transposes of F matrices on each graded piece.
CheckResult check_transposes(Modulus e, int d);
/// Partial inverse, string lengths, phi - epsilon = n_i, module coherence, connectivity.
CheckResult check_crystal(Modulus e, int d);
/// Reduced-signature confluence for every +/- word of length <= max_len.
CheckResult check_signature_confluence(int max_len);
/// weight equality <=> p-core equality for all pairs in Lambda_k, k <= d.
CheckResult check_block_theorem(Modulus e, int d);
/// Every maximal rim-hook removal sequence from |lambda| <= d ends at p_core;
/// greedy removal also agrees with the abacus.
CheckResult check_core_well_defined(Modulus e, int d);
/// c_{n+1}(lambda) - c_n(mu) = 2(lambda_l - l) + |lambda| + n, and x/y eigenvalues are contents.
CheckResult check_casimir(int d);
/// Schur stability, branching and Pieri coherence for |lambda| <= max_size, n <= max_n.
CheckResult check_characters(int max_size, int max_n);
/// sum_i op_matrix(F, i) equals the Pieri matrix on Lambda_k, k <= d.
CheckResult check_decategorification(Modulus e, int d);
/// Defining relations of the degenerate affine Hecke algebra for ranks 2..max_rank.
CheckResult check_hecke_relations(int max_rank);
/// (ab)c = a(bc) on `count` seeded random triples of basis elements, y-degree <= 3, rank <= 4.
CheckResult check_hecke_associativity(std::uint64_t seed, int count);
/// Straightening via every reduced word of w in S_3 agrees, exponents <= 2.
CheckResult check_reduced_word_independence();
/// Filtration degree and subalgebra embeddings on seeded random pairs.
CheckResult check_hecke_filtration(std::uint64_t seed, int count);

const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Throws std::invalid_argument on an unknown name.
VerifyReport verify(const std::string& suite, Modulus e, int d, std::uint64_t seed = kDefaultSeed);

}  // namespace decat
