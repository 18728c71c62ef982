#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace decat {

/// A box of a Young diagram, 1-based, English notation (row 1 on top).
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

/// Residue modulus: 0 (the sl_infinity case) or e >= 2.
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(int e);

  int value() const { return e_; }
  bool is_infinite() const { return e_ == 0; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  int e_ = 0;
};

/// A content reduced into [0, e) (or left alone when e = 0).
class Residue {
 public:
  Residue(long value, Modulus m);

  long value() const { return value_; }
  Modulus modulus() const { return modulus_; }

  Residue shifted(long delta) const { return Residue(value_ + delta, modulus_); }

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue& a, const Residue& b) {
    return a.value_ <=> b.value_;
  }

 private:
  long value_;
  Modulus modulus_;
};

/// Weakly decreasing sequence of positive row lengths.
///
/// The empty partition is a valid value. Ordering via operator<=> is plain
/// lexicographic comparison of the parts; use graded_less() when a
/// presentation order is needed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row length, 1-based; 0 past the last row.
  int row(int k) const;
  /// Column length, 1-based; 0 past the first row.
  int column(int l) const;

  bool contains(const Box& b) const;
  int hook_length(const Box& b) const;
  Partition conjugate() const;
  std::vector<Box> boxes() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Size ascending, then lexicographically descending within a size.
bool graded_less(const Partition& a, const Partition& b);

struct GradedLess {
  bool operator()(const Partition& a, const Partition& b) const { return graded_less(a, b); }
};

/// Text form: `[4,4,2,1]`, `[]` for the empty partition.
std::string to_string(const Partition& p);

/// Parses the bracketed text form. Whitespace around tokens is allowed.
/// Throws std::invalid_argument naming the offending token.
Partition parse_partition(std::string_view text);

/// All partitions of d, lexicographically descending.
std::vector<Partition> partitions_of(int d);
/// All partitions of size <= d in graded order.
std::vector<Partition> partitions_up_to(int d);

int content(const Box& b);
Residue residue(const Box& b, Modulus e);

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);

long m_count(const Partition& p, const Residue& i);
long n_value(const Partition& p, const Residue& i);

Partition add_box(const Partition& p, const Box& b);
Partition remove_box(const Partition& p, const Box& b);

struct RimHook {
  std::vector<Box> boxes;  // bottom-left to top-right
  Partition remainder;

  friend bool operator==(const RimHook&, const RimHook&) = default;
};

/// Connected rim strips of exactly `length` boxes whose removal leaves a
/// partition, in rim order of their bottom-left box.
std::vector<RimHook> removable_rim_hooks(const Partition& p, int length);

Partition p_core(const Partition& p, Modulus e);
int p_weight(const Partition& p, Modulus e);

}  // namespace decat
