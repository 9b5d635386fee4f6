#pragma once

#include <cmath>
#include <stdexcept>

#include "ldpks/mechanisms.hpp"
#include "ldpks/ranking.hpp"

namespace ldpks {

// Inputs of the closed-form estimation error bounds.
struct BoundInputs {
  int agent_count;        // n
  int alternative_count;  // m
  int query_count;        // K
  double epsilon;         // overall per-agent budget
  double theta;           // Mallows dispersion in [0, 1]
};

// Margin p - q between concordant and discordant pair probabilities at
// dispersion theta: theta / (2 - theta), increasing from 0 to 1.
inline double pairwise_margin(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::domain_error("pairwise_margin: theta must lie in [0, 1]");
  return theta / (2.0 - theta);
}

// Signal strength of a budget epsilon split across k randomized-response
// answers: eps^2 k / (eps + 2k)^2. Larger means a smaller error bound; the
// real-valued maximizer sits at k = eps / 2.
inline double rr_split_utility(int k, double epsilon) {
  if (k < 1) throw std::domain_error("rr_split_utility: k must be >= 1");
  if (!(epsilon > 0)) throw std::domain_error("rr_split_utility: epsilon must be positive");
  const double d = epsilon + 2.0 * k;
  return epsilon * epsilon * k / (d * d);
}

// Laplace counterpart: (1 - e^(-eps/2k))^2 k.
inline double lap_split_utility(int k, double epsilon) {
  if (k < 1) throw std::domain_error("lap_split_utility: k must be >= 1");
  if (!(epsilon > 0)) throw std::domain_error("lap_split_utility: epsilon must be positive");
  const double t = -std::expm1(-epsilon / (2.0 * k));
  return t * t * k;
}

// Expected number of alternative pairs whose estimated majority sign comes
// out wrong on Mallows(theta) data:
//   2 C(m,2) exp(-g(K) margin^2 n / (m (m-1)))
// with g the mechanism's split utility. The estimation error stays below six
// times this value with probability at least 1 - 2^(-6 value).
inline double expected_error_bound(const BoundInputs& in, Mechanism mechanism) {
  if (in.agent_count < 1 || in.alternative_count < 2)
    throw std::domain_error("expected_error_bound: need n >= 1 and m >= 2");
  if (in.query_count < 1 || in.query_count > pair_count(in.alternative_count))
    throw std::domain_error("expected_error_bound: K must lie in [1, C(m,2)]");
  const double g = mechanism == Mechanism::RandomizedResponse
                       ? rr_split_utility(in.query_count, in.epsilon)
                       : lap_split_utility(in.query_count, in.epsilon);
  const double margin = pairwise_margin(in.theta);
  const double m = static_cast<double>(in.alternative_count);
  const double pairs = m * (m - 1) / 2.0;
  return 2.0 * pairs * std::exp(-g * margin * margin * in.agent_count / (m * (m - 1)));
}

// Query count maximizing the mechanism's split utility over 1..C(m,2);
// ties go to the smaller count.
inline int choose_query_count(double epsilon, int m, Mechanism mechanism) {
  if (m < 2) throw std::domain_error("choose_query_count: need m >= 2");
  const int max_k = pair_count(m);
  int best_k = 1;
  double best_g = mechanism == Mechanism::RandomizedResponse
                      ? rr_split_utility(1, epsilon)
                      : lap_split_utility(1, epsilon);
  for (int k = 2; k <= max_k; ++k) {
    const double g = mechanism == Mechanism::RandomizedResponse
                         ? rr_split_utility(k, epsilon)
                         : lap_split_utility(k, epsilon);
    if (g > best_g) {
      best_g = g;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace ldpks
