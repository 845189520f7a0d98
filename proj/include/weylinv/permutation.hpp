#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "weylinv/partition.hpp"

namespace weylinv::combinat {

// A permutation of {1..k}, stored 0-based: image(i) = images[i].
// Products compose as functions, (s*u)(i) = s(u(i)), which makes the
// variable-permuting module actions below genuine right actions.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i)]; }

  Permutation inverse() const {
    std::vector<int> im(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      im[static_cast<std::size_t>(images[i])] = static_cast<int>(i);
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images < b.images; }
};

inline Permutation compose(const Permutation& s, const Permutation& u) {
  if (s.degree() != u.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(s.degree()));
  for (int i = 0; i < s.degree(); ++i) im[static_cast<std::size_t>(i)] = s(u(i));
  return Permutation(std::move(im));
}

inline Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  std::vector<int> cycles;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = p(j);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return Partition(std::move(cycles));
}

inline int sign(const Permutation& p) {
  int s = 1;
  for (int len : cycle_type(p).parts)
    if (len % 2 == 0) s = -s;
  return s;
}

// All k! permutations in lexicographic order of their image vectors.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> im(static_cast<std::size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// Centralizer size of the conjugacy class with this cycle type.
inline exactla::Integer centralizer_size(const Partition& mu) {
  exactla::Integer z = 1;
  int run = 0, prev = 0;
  for (int part : mu.parts) {
    z *= part;
    if (part == prev) {
      ++run;
      z *= run;
    } else {
      prev = part;
      run = 1;
    }
  }
  return z;
}

}  // namespace weylinv::combinat
