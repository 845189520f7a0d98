#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylinv/rational.hpp"

namespace weylinv::combinat {

// A partition: weakly decreasing list of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int num_parts() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, zero beyond the last part
    return (i >= 1 && i <= num_parts()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

// Column lengths of the diagram; an involution.
inline Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  if (!p.parts.empty()) {
    cols.resize(static_cast<std::size_t>(p.parts[0]), 0);
    for (int part : p.parts)
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

// Number of standard tableaux of this shape, by the hook length formula.
inline exactla::Integer dimension(const Partition& p) {
  const Partition conj = conjugate(p);
  exactla::Integer hooks = 1;
  for (int i = 1; i <= p.num_parts(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      hooks *= (p.part(i) - j) + (conj.part(j) - i) + 1;
  return exactla::factorial(static_cast<unsigned>(p.size())) / hooks;
}

// All partitions of k with at most max_parts parts, in reverse-lexicographic
// order: (k) first, (1,...,1) last.  max_parts <= 0 means unbounded.
inline std::vector<Partition> partitions_of(int k, int max_parts = 0) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative k");
  if (max_parts <= 0) max_parts = k;
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int first = std::min(remaining, bound); first >= 1; --first) {
      cur.push_back(first);
      self(self, remaining - first, first);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

}  // namespace weylinv::combinat
