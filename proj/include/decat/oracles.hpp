#pragma once

// Reference computations that share no code path with the main modules.
// The verify harness and the test suites compare against these.

#include <set>
#include <string>
#include <vector>

#include "decat/characters.hpp"
#include "decat/hecke.hpp"
#include "decat/partition.hpp"

namespace decat::oracle {

/// e-core via beta numbers on an e-runner abacus: slide every bead up its
/// runner as far as it goes.
Partition abacus_core(const Partition& p, int e);

/// Every mu inside lambda with |lambda/mu| = length such that lambda/mu is
/// edge-connected and contains no 2x2 square.
std::vector<Partition> rim_hook_remainders(const Partition& p, int length);

/// Every partition reachable as a terminal point of some maximal sequence of
/// rim e-hook removals.
std::set<Partition> terminal_cores(const Partition& p, int e);

/// All words obtainable by deleting adjacent "+-" pairs in every possible
/// order until none remain.
std::set<std::string> all_signature_reductions(const std::string& word);

/// Complete homogeneous symmetric polynomial h_k(x_1..x_n).
SymPolynomial complete_homogeneous(int k, int n);

/// det(h_{lambda_i - i + j}) by Leibniz expansion.
SymPolynomial jacobi_trudi(const Partition& p, int n);

/// tau_i * y^a via the divided difference formula
///   tau_i f = (s_i f) tau_i + (f - s_i f) / (y_{i+1} - y_i).
HeckeElement tau_times_monomial_closed_form(int i, const std::vector<int>& a);

}  // namespace decat::oracle
