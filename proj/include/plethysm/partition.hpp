#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "plethysm/numeric.hpp"

namespace plethysm {

// Weakly decreasing sequence of positive integers. No trailing zeros are
// stored, so the empty partition is the only partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Sorts arbitrary positive parts into a partition; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  // (1^k) for some k >= 1.
  bool is_column() const;

  // "3,2,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Orders partitions of equal size reverse-lexicographically: (4) < (3,1) < (2,2).
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const { return b.parts() < a.parts(); }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

inline constexpr int kDefaultEnumerationCap = 40;

Partition conjugate(const Partition& p);
Partition union_parts(const Partition& a, const Partition& b);
Partition add_parts(const Partition& a, const Partition& b);
Partition repeat(const Partition& p, int n);
Partition column(int k);

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

// f^lambda via the hook length formula.
Integer num_standard_tableaux(const Partition& lambda);

// Centralizer order prod_i i^{m_i} m_i!.
Integer z_of(const Partition& lambda);

// Parses "3,2,1"; "", "--", "()" and "[]" denote the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace plethysm
