#include "symbound/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symbound {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw std::invalid_argument("Partition: zero part before a nonzero part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  // Lexicographic comparison on the zero-padded part sequences, larger first.
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part, unsigned parts_left,
                     std::vector<unsigned>& stack, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  if (parts_left == 0) return;
  // Largest first gives the reverse-lexicographic listing directly.
  unsigned hi = std::min(remaining, max_part);
  // A part below ceil(remaining / parts_left) cannot complete the partition.
  unsigned lo = (remaining + parts_left - 1) / parts_left;
  for (unsigned p = hi; p >= lo && p >= 1; --p) {
    stack.push_back(p);
    emit_partitions(remaining - p, p, parts_left - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned d, unsigned max_parts) {
  if (max_parts == 0) throw std::invalid_argument("partitions_of: max_parts must be >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> stack;
  emit_partitions(d, d == 0 ? 1u : d, max_parts, stack, out);
  return out;
}

Partition hook_shape(unsigned k, unsigned rows) {
  if (k == 0 || rows == 0) throw std::invalid_argument("hook_shape: k and rows must be >= 1");
  std::vector<unsigned> parts(rows, 1u);
  parts[0] = k;
  return Partition(std::move(parts));
}

}  // namespace symbound
