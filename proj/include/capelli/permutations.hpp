#ifndef CAPELLI_PERMUTATIONS_HPP
#define CAPELLI_PERMUTATIONS_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace capelli {

/// Sign of a permutation of 1..n given as a value vector.
inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Calls fn(perm, sign) for every permutation of 1..n in lexicographic
/// order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// All permutations of 1..n with their signs, lexicographic order.
inline std::vector<std::pair<std::vector<int>, int>> all_permutations(int n) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for_each_permutation(
      n, [&](const std::vector<int>& p, int s) { out.emplace_back(p, s); });
  return out;
}

}  // namespace capelli

#endif
