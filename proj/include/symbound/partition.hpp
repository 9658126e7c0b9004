#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symbound {

// Integer partition: a weakly decreasing sequence of positive integers.
//
// Construction policy: trailing zeros are stripped, so (2,1,0) and (2,1) are
// the same value; any other violation (an increase, or a zero followed by a
// nonzero part) is rejected. The empty partition is the unique weight-0 value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Zero-padded view: part(i) = 0 for i >= length().
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0u; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  std::string to_string() const;  // "(3,1,1)"; "()" for the empty partition

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

// Canonical total order used for enumeration, map keys and serialization:
// weight ascending, then parts lexicographically descending. On a fixed
// weight this is the reverse-lexicographic listing (d) > (d-1,1) > ... and it
// refines dominance: lambda strictly dominated by mu sorts after mu.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return canonical_less(a, b);
  }
};

// All partitions of d with at most max_parts parts, each exactly once, in the
// canonical (reverse-lexicographic) order. d = 0 yields { () }.
std::vector<Partition> partitions_of(unsigned d, unsigned max_parts);

// Hook (k, 1, 1, ..., 1) with rows-1 trailing ones.
Partition hook_shape(unsigned k, unsigned rows);

}  // namespace symbound
