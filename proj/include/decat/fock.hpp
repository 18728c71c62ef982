#pragma once

#include <map>
#include <string>
#include <vector>

#include "decat/integer.hpp"
#include "decat/partition.hpp"

namespace decat {

/// Finite integer combination of basis vectors v_lambda.
class FockVector {
 public:
  using Terms = std::map<Partition, Integer>;

  FockVector() = default;
  static FockVector basis(const Partition& p) {
    FockVector v;
    v.terms_.emplace(p, 1);
    return v;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& p) const;

  void add_term(const Partition& p, const Integer& c);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const Integer& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Integer& c, FockVector v) { return v *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

std::string to_string(const FockVector& v);

/// The affine weight omega_0 - sum_i m_i alpha_i, stored as the map i -> m_i
/// with zero multiplicities omitted.
class Weight {
 public:
  Weight(Modulus e, std::map<long, long> alpha_mult);

  Modulus modulus() const { return modulus_; }
  const std::map<long, long>& alpha_mult() const { return alpha_mult_; }
  long multiplicity(long residue) const;

  /// omega_0 - sum m_i alpha_i shifted by -alpha_i (f_i direction).
  Weight minus_alpha(const Residue& i) const;
  Weight plus_alpha(const Residue& i) const;

  /// <wt, h_i> evaluated through the Cartan matrix.
  long pairing(const Residue& i) const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Modulus modulus_;
  std::map<long, long> alpha_mult_;
};

/// Entry a_ij of the generalized Cartan matrix of affine sl_e (sl_infinity for e = 0).
long cartan_entry(const Residue& i, const Residue& j);

FockVector apply_f(const FockVector& v, const Residue& i);
FockVector apply_e(const FockVector& v, const Residue& i);
FockVector apply_h(const FockVector& v, const Residue& i);

Weight weight(const Partition& p, Modulus e);

/// Residues that can act nontrivially on partitions of size <= d.
std::vector<Residue> active_residues(Modulus e, int d);

enum class OpKind { E, F, H };

struct SparseIntMatrix {
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // sorted by (col, row)

  Integer at(std::size_t r, std::size_t c) const;
};

/// Matrix of an operator from span(Lambda_d) to span(Lambda_{d-1}),
/// span(Lambda_{d+1}) or span(Lambda_d). Rows and columns are indexed by
/// partitions in lexicographically descending order.
SparseIntMatrix op_matrix(OpKind kind, const Residue& i, int d);

/// Matrix of sum_i F_i, i.e. v_lambda -> sum of all one-box additions.
SparseIntMatrix total_f_matrix(int d);

}  // namespace decat
