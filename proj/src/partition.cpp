#include "decat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace decat {

namespace {

bool rim_before(const Box& a, const Box& b) {
  if (a.row != b.row) return a.row > b.row;
  return a.col < b.col;
}

}  // namespace

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Modulus::Modulus(int e) : e_(e) {
  if (e < 0 || e == 1)
    throw std::invalid_argument("invalid modulus " + std::to_string(e) + ": expected 0 or >= 2");
}

Residue::Residue(long value, Modulus m) : value_(value), modulus_(m) {
  if (const long e = m.value(); e > 0) {
    value_ %= e;
    if (value_ < 0) value_ += e;
  }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1)
      throw std::invalid_argument("partition parts must be positive, got " + std::to_string(parts_[k]));
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int k) const {
  return (k >= 1 && k <= length()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
}

int Partition::column(int l) const {
  if (l < 1) return 0;
  int len = 0;
  while (len < length() && parts_[static_cast<std::size_t>(len)] >= l) ++len;
  return len;
}

bool Partition::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= row(b.row);
}

int Partition::hook_length(const Box& b) const {
  if (!contains(b)) throw std::invalid_argument("box " + to_string(b) + " not in partition");
  return (row(b.row) - b.col) + (column(b.col) - b.row) + 1;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int l = 1; l <= row(1); ++l) out.push_back(column(l));
  return Partition(std::move(out));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int k = 1; k <= length(); ++k)
    for (int l = 1; l <= row(k); ++l) out.push_back({k, l});
  return out;
}

bool graded_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return b < a;
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(p.parts()[k]);
  }
  out += ']';
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  if (whole.size() < 2 || whole.front() != '[' || whole.back() != ']')
    throw std::invalid_argument("malformed partition '" + std::string(text) + "': expected [a,b,...]");
  std::string_view body = trim(whole.substr(1, whole.size() - 2));
  std::vector<int> parts;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view token = trim(body.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "': bad part '" +
                                  std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty())
      throw std::invalid_argument("malformed partition '" + std::string(text) + "': trailing ','");
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw std::invalid_argument("malformed partition '" + std::string(text) + "': parts not weakly decreasing");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with the largest next part first yields lexicographically
  // descending order.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = partitions_of(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

int content(const Box& b) { return b.col - b.row; }

Residue residue(const Box& b, Modulus e) { return Residue(content(b), e); }

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int k = p.length() + 1; k >= 1; --k)
    if (k == 1 || p.row(k - 1) > p.row(k)) out.push_back({k, p.row(k) + 1});
  return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int k = p.length(); k >= 1; --k)
    if (p.row(k) > p.row(k + 1)) out.push_back({k, p.row(k)});
  return out;
}

long m_count(const Partition& p, const Residue& i) {
  long count = 0;
  for (int k = 1; k <= p.length(); ++k)
    for (int l = 1; l <= p.row(k); ++l)
      if (residue({k, l}, i.modulus()) == i) ++count;
  return count;
}

long n_value(const Partition& p, const Residue& i) {
  // For e = 2 the i-1 and i+1 terms coincide and both are counted.
  const long delta = (i.value() == 0) ? 1 : 0;
  return m_count(p, i.shifted(-1)) + m_count(p, i.shifted(1)) - 2 * m_count(p, i) + delta;
}

Partition add_box(const Partition& p, const Box& b) {
  const auto addable = addable_boxes(p);
  if (std::find(addable.begin(), addable.end(), b) == addable.end())
    throw std::invalid_argument("box " + to_string(b) + " is not addable to " + to_string(p));
  std::vector<int> parts = p.parts();
  if (b.row > p.length())
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& p, const Box& b) {
  const auto removable = removable_boxes(p);
  if (std::find(removable.begin(), removable.end(), b) == removable.end())
    throw std::invalid_argument("box " + to_string(b) + " is not removable from " + to_string(p));
  std::vector<int> parts = p.parts();
  if (--parts[static_cast<std::size_t>(b.row - 1)] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<RimHook> removable_rim_hooks(const Partition& p, int length) {
  if (length < 1) throw std::invalid_argument("rim hook length must be positive");
  std::vector<RimHook> out;
  for (const Box& corner : p.boxes()) {
    if (p.hook_length(corner) != length) continue;
    // The rim strip spanned by the hook of `corner`: rim boxes inside the
    // rectangle from the corner to the arm end and leg end.
    const int last_row = p.column(corner.col);
    const int last_col = p.row(corner.row);
    RimHook hook;
    std::vector<int> parts = p.parts();
    for (int k = corner.row; k <= last_row; ++k) {
      for (int l = corner.col; l <= last_col; ++l) {
        const Box b{k, l};
        if (p.contains(b) && !p.contains({k + 1, l + 1})) {
          hook.boxes.push_back(b);
          --parts[static_cast<std::size_t>(k - 1)];
        }
      }
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    hook.remainder = Partition(std::move(parts));
    std::sort(hook.boxes.begin(), hook.boxes.end(), rim_before);
    out.push_back(std::move(hook));
  }
  std::sort(out.begin(), out.end(), [](const RimHook& a, const RimHook& b) {
    return rim_before(a.boxes.front(), b.boxes.front());
  });
  return out;
}

Partition p_core(const Partition& p, Modulus e) {
  if (e.is_infinite()) return p;
  Partition cur = p;
  for (;;) {
    auto hooks = removable_rim_hooks(cur, e.value());
    if (hooks.empty()) return cur;
    cur = std::move(hooks.front().remainder);
  }
}

int p_weight(const Partition& p, Modulus e) {
  if (e.is_infinite()) return 0;
  const int removed = p.size() - p_core(p, e).size();
  if (removed % e.value() != 0) throw std::logic_error("core size not congruent to partition size");
  return removed / e.value();
}

}  // namespace decat
