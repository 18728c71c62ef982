#pragma once

#include <cstdint>
#include <vector>

#include "decat/partition.hpp"

namespace decat {

/// c_n(lambda) = sum_{i=1}^n (n - 2i + 1) lambda_i + lambda_i^2, lambda padded with zeros.
/// Throws std::invalid_argument if n is smaller than the number of parts.
std::int64_t casimir_scalar(const Partition& p, int n);

/// Scalar by which X acts on the Weyl factor V(lambda - b) of E(V(lambda)).
///
/// Computed as (c_{n+1}(lambda) - c_n(lambda - b) - |lambda| - n) / 2 and
/// checked against content(b); a mismatch throws std::logic_error.
Residue x_eigenvalue(const Partition& p, const Box& removable, int n, Modulus e);

/// Scalar by which Y acts on the Weyl factor V(lambda + b) of F(V(lambda)),
/// computed as (c_n(lambda + b) - c_n(lambda) - n) / 2 and checked against content(b).
Residue y_eigenvalue(const Partition& p, const Box& addable, int n, Modulus e);

struct EigenvalueRow {
  Box box;
  bool addable;    // false: removable
  long content;
  Residue residue;
};

/// x-eigenvalues for every removable box and y-eigenvalues for every addable
/// box that the given n admits.
std::vector<EigenvalueRow> eigenvalue_table(const Partition& p, int n, Modulus e);

}  // namespace decat
