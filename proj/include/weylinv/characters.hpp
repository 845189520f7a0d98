#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylinv/partition.hpp"

namespace weylinv::combinat {

namespace detail {

// Beta-set form of a partition: strictly decreasing first-column hook
// lengths lambda_i + (L - i), padded to length L.
inline std::vector<int> beta_set(const Partition& lambda, int length) {
  std::vector<int> beta(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i + 1) + (length - 1 - i);
  return beta;
}

inline Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

inline long long mn_recurse(const Partition& lambda, const std::vector<int>& mu, std::size_t mi,
                            std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (mi == mu.size()) return 1;  // both empty
  std::vector<int> mu_rest(mu.begin() + static_cast<std::ptrdiff_t>(mi), mu.end());
  const auto key = std::make_pair(lambda.parts, mu_rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = mu[mi];
  const int length = std::max(lambda.num_parts(), 1);
  auto beta = beta_set(lambda, length);
  long long total = 0;
  // Remove a border strip of size `strip`: decrease one beta number by
  // `strip` so that the result is again a set; the sign counts the beta
  // numbers jumped over.
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    auto nb = beta;
    nb[i] = target;
    const long long sub = mn_recurse(from_beta(std::move(nb)), mu, mi + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace detail

// Irreducible character of S_k: chi^lambda evaluated on the conjugacy
// class of cycle type mu, by the Murnaghan-Nakayama recursion.
inline long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character: |lambda| != |mu|");
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return detail::mn_recurse(lambda, mu.parts, 0, memo);
}

}  // namespace weylinv::combinat
