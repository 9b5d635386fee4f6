#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ldpks/ranking.hpp"
#include "ldpks/rng.hpp"
#include "ldpks/theory.hpp"

namespace ldpks {

// Mallows model parameters in the dispersion form theta in [0, 1], where
// p = 1/(2 - theta) is the probability that a sampled ranking agrees with
// the ground truth on a pair of alternatives adjacent in the ground truth.
//
// The repeated-insertion sampler below is parametrized by phi, with ranking
// probability proportional to phi^distance. Swapping two reference-adjacent
// alternatives changes the distance by exactly one, so adjacent-pair
// agreement under phi is 1/(1 + phi); matching it to 1/(2 - theta) gives
// phi = 1 - theta in closed form. Both parametrizations are accepted.
class MallowsParams {
 public:
  static MallowsParams from_theta(double theta, Ranking ground_truth) {
    if (!(theta >= 0.0 && theta <= 1.0))
      throw std::domain_error("mallows: theta must lie in [0, 1]");
    return MallowsParams(theta, std::move(ground_truth));
  }

  static MallowsParams from_phi(double phi, Ranking ground_truth) {
    if (!(phi >= 0.0 && phi <= 1.0))
      throw std::domain_error("mallows: phi must lie in [0, 1]");
    return MallowsParams(1.0 - phi, std::move(ground_truth));
  }

  double theta() const { return theta_; }
  double phi() const { return 1.0 - theta_; }
  // p_M, the per-pair probability of agreeing with the ground truth.
  double pairwise_agreement() const { return 1.0 / (2.0 - theta_); }
  const Ranking& ground_truth() const { return ground_truth_; }

 private:
  MallowsParams(double theta, Ranking ground_truth)
      : theta_(theta), ground_truth_(std::move(ground_truth)) {}

  double theta_;
  Ranking ground_truth_;
};

// One Mallows draw by repeated insertion: the alternatives enter in ground
// truth order, and the i-th entry jumps ahead of d already-placed (better)
// alternatives with probability proportional to phi^d, d in 0..i.
template <typename Rng>
Ranking mallows_draw(const MallowsParams& params, Rng& rng) {
  const Ranking& truth = params.ground_truth();
  const int m = truth.size();
  const double phi = params.phi();
  std::vector<int> order;
  order.reserve(m);
  std::vector<double> cumulative;  // cumulative[d] = 1 + phi + ... + phi^d
  cumulative.reserve(m);
  double power = 1.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      cumulative.push_back(1.0);
    } else {
      power *= phi;
      cumulative.push_back(cumulative.back() + power);
    }
    int displacement = 0;
    if (i > 0) {
      const double u = uniform_open(rng) * cumulative[i];
      while (displacement < i && u >= cumulative[displacement]) ++displacement;
    }
    order.insert(order.end() - displacement, truth.at(i));
  }
  return Ranking(std::move(order));
}

// n independent Mallows draws.
template <typename Rng>
Profile mallows_sample(const MallowsParams& params, int n, Rng& rng) {
  if (n < 1) throw std::domain_error("mallows_sample: need n >= 1");
  std::vector<Ranking> rankings;
  rankings.reserve(n);
  for (int i = 0; i < n; ++i) rankings.push_back(mallows_draw(params, rng));
  return Profile(std::move(rankings));
}

// Per-agent, per-pair agreement bits from the pairwise Bernoulli model: each
// canonical pair of each agent independently agrees with the ground truth
// with probability p_M = 1/(2 - theta). Independent pairs may be cyclic, so
// the table feeds the protocol as raw answers rather than as rankings.
class PairwiseTruthTable {
 public:
  PairwiseTruthTable(Ranking ground_truth, std::vector<std::vector<std::uint8_t>> agrees)
      : ground_truth_(std::move(ground_truth)), agrees_(std::move(agrees)) {}

  int agent_count() const { return static_cast<int>(agrees_.size()); }
  int alternative_count() const { return ground_truth_.size(); }
  const Ranking& ground_truth() const { return ground_truth_; }

  bool agrees(int agent, int pair_idx) const { return agrees_[agent][pair_idx] != 0; }

  // 1 iff the agent prefers alternative j over l, for canonical j < l.
  int true_answer(int agent, int j, int l) const {
    const bool truth_prefers_j = ground_truth_.prefers(j, l);
    const bool agree = agrees(agent, pair_index(j, l, alternative_count()));
    return (agree ? truth_prefers_j : !truth_prefers_j) ? 1 : 0;
  }

 private:
  Ranking ground_truth_;
  std::vector<std::vector<std::uint8_t>> agrees_;  // [agent][pair]
};

template <typename Rng>
PairwiseTruthTable pairwise_bernoulli_sample(const MallowsParams& params, int n, Rng& rng) {
  if (n < 1) throw std::domain_error("pairwise_bernoulli_sample: need n >= 1");
  const int pairs = pair_count(params.ground_truth().size());
  const double p = params.pairwise_agreement();
  std::vector<std::vector<std::uint8_t>> agrees(n);
  for (auto& row : agrees) {
    row.resize(pairs);
    for (int idx = 0; idx < pairs; ++idx) row[idx] = bernoulli(rng, p) ? 1 : 0;
  }
  return PairwiseTruthTable(params.ground_truth(), std::move(agrees));
}

// Exact comparison profile of a truth table: per pair, agents preferring j
// minus agents preferring l.
inline CmpProfile exact_cmp(const PairwiseTruthTable& table) {
  const int m = table.alternative_count();
  CmpProfile cmp(m);
  for (int agent = 0; agent < table.agent_count(); ++agent)
    for (int j = 0; j < m; ++j)
      for (int l = j + 1; l < m; ++l)
        cmp.canonical_score(pair_index(j, l, m)) +=
            table.true_answer(agent, j, l) == 1 ? 1.0 : -1.0;
  return cmp;
}

}  // namespace ldpks
