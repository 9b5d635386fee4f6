#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ldpks/ranking.hpp"
#include "ldpks/rng.hpp"

namespace ldpks {

namespace detail {

template <typename Rng>
void kwiksort_group(const CmpProfile& cmp, const std::vector<int>& group, Rng& rng,
                    std::vector<int>& out) {
  if (group.empty()) return;
  if (group.size() == 1) {
    out.push_back(group.front());
    return;
  }
  const int pivot = group[uniform_below(rng, group.size())];
  std::vector<int> before;
  std::vector<int> after;
  for (int q : group) {
    if (q == pivot) continue;
    const double s = cmp.score(pivot, q);
    if (s < 0)
      before.push_back(q);  // the majority prefers q to the pivot
    else if (s > 0)
      after.push_back(q);
    else
      (bernoulli(rng, 0.5) ? before : after).push_back(q);
  }
  kwiksort_group(cmp, before, rng, out);
  out.push_back(pivot);
  kwiksort_group(cmp, after, rng, out);
}

}  // namespace detail

// Quicksort-style aggregation over pairwise majority scores. A uniformly
// random pivot splits the remaining alternatives by the sign of
// score(pivot, q); an exact tie sends q to either side with a fair coin.
// Deterministic given the engine state.
template <typename Rng>
Ranking kwiksort(const CmpProfile& cmp, Rng& rng) {
  std::vector<int> all(cmp.alternative_count());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> out;
  out.reserve(all.size());
  detail::kwiksort_group(cmp, all, rng, out);
  return Ranking(std::move(out));
}

// Brute-force Kemeny optimum: enumerates all m! rankings and returns one
// minimizing the average Kendall tau distance, together with that minimum.
// Ties resolve to the lexicographically smallest order. Guarded to m <= 8.
inline std::pair<Ranking, double> kemeny_optimal(const Profile& p) {
  const int m = p.alternative_count();
  if (m > 8) throw std::length_error("kemeny_optimal: m > 8 is not supported");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  long long best_total = -1;
  std::vector<int> pos(m);
  do {
    for (int k = 0; k < m; ++k) pos[perm[k]] = k;
    long long total = 0;
    for (const Ranking& r : p)
      for (int j = 0; j < m; ++j)
        for (int l = j + 1; l < m; ++l)
          if ((pos[j] < pos[l]) != r.prefers(j, l)) ++total;
    // Lexicographic enumeration: a strict improvement keeps the first
    // (smallest) order among equals.
    if (best_total < 0 || total < best_total) {
      best_total = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Ranking(std::move(best)),
          static_cast<double>(best_total) / p.agent_count()};
}

}  // namespace ldpks
