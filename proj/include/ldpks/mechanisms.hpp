#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ldpks/rng.hpp"

namespace ldpks {

enum class Mechanism { RandomizedResponse, Laplace };

// Per-agent privacy budget epsilon, split evenly across query_count answers.
class PrivacyBudget {
 public:
  PrivacyBudget(double epsilon, int query_count)
      : epsilon_(epsilon), query_count_(query_count) {
    if (!(epsilon > 0)) throw std::domain_error("privacy budget: epsilon must be positive");
    if (query_count < 1) throw std::domain_error("privacy budget: query count must be >= 1");
  }

  double epsilon() const { return epsilon_; }
  int query_count() const { return query_count_; }
  double epsilon_per_query() const { return epsilon_ / query_count_; }

 private:
  double epsilon_;
  int query_count_;
};

// Probability that randomized response keeps the true bit:
// e^eps / (e^eps + 1), in (1/2, 1) for positive eps.
inline double rr_keep_probability(double epsilon_k) {
  if (!(epsilon_k > 0))
    throw std::domain_error("rr_keep_probability: epsilon_k must be positive");
  const double w = std::exp(epsilon_k);
  return w / (w + 1.0);
}

// Probability that a Laplace-perturbed bit classifies back to its true side
// at the 0.5 threshold: 1 - exp(-eps/2)/2.
inline double lap_keep_probability(double epsilon_k) {
  if (!(epsilon_k > 0))
    throw std::domain_error("lap_keep_probability: epsilon_k must be positive");
  return 1.0 - 0.5 * std::exp(-epsilon_k / 2.0);
}

// Symmetric 2x2 answer-flip matrix [[p, 1-p], [1-p, p]] shared by agents and
// curator. Requires p in (1/2, 1] so the matrix is invertible; rows sum to 1.
class TransformationMatrix {
 public:
  explicit TransformationMatrix(double keep_prob) : keep_prob_(keep_prob) {
    if (!(keep_prob > 0.5) || !(keep_prob <= 1.0))
      throw std::domain_error(
          "transformation matrix: keep probability must lie in (1/2, 1]");
  }

  static TransformationMatrix rr(double epsilon_k) {
    return TransformationMatrix(rr_keep_probability(epsilon_k));
  }
  static TransformationMatrix lap(double epsilon_k) {
    return TransformationMatrix(lap_keep_probability(epsilon_k));
  }

  double keep_prob() const { return keep_prob_; }
  double flip_prob() const { return 1.0 - keep_prob_; }
  double determinant() const { return 2.0 * keep_prob_ - 1.0; }

  // Forward mixing M * (x0, x1): the expected observed counts given true
  // counts.
  std::pair<double, double> mix(double x0, double x1) const {
    return {keep_prob_ * x0 + flip_prob() * x1, flip_prob() * x0 + keep_prob_ * x1};
  }

 private:
  double keep_prob_;
};

// Closed-form inverse of the transformation matrix applied to observed
// answer counts (y0, y1). Estimates preserve y0 + y1 and may be negative or
// non-integral.
inline std::pair<double, double> mle_reconstruct(double y0, double y1,
                                                 const TransformationMatrix& m) {
  const double p = m.keep_prob();
  const double q = m.flip_prob();
  const double det = m.determinant();
  return {(p * y0 - q * y1) / det, (p * y1 - q * y0) / det};
}

// Randomized response on one bit: keeps the truth with probability
// rr_keep_probability(epsilon_k), flips it otherwise. One engine draw.
template <typename Rng>
int rr_perturb(int true_bit, double epsilon_k, Rng& rng) {
  if (true_bit != 0 && true_bit != 1)
    throw std::domain_error("rr_perturb: bit must be 0 or 1");
  return bernoulli(rng, rr_keep_probability(epsilon_k)) ? true_bit : 1 - true_bit;
}

// Laplace mechanism on one bit at local sensitivity 1: bit + Lap(1/eps_k).
// One engine draw.
template <typename Rng>
double lap_perturb(int true_bit, double epsilon_k, Rng& rng) {
  if (true_bit != 0 && true_bit != 1)
    throw std::domain_error("lap_perturb: bit must be 0 or 1");
  if (!(epsilon_k > 0)) throw std::domain_error("lap_perturb: epsilon_k must be positive");
  return static_cast<double>(true_bit) + laplace(rng, 1.0 / epsilon_k);
}

// One Laplace draw with scale 1/epsilon_prime, as added to aggregate scores
// in the central-model baseline.
template <typename Rng>
double central_laplace_noise(double epsilon_prime, Rng& rng) {
  if (!(epsilon_prime > 0))
    throw std::domain_error("central_laplace_noise: epsilon must be positive");
  return laplace(rng, 1.0 / epsilon_prime);
}

}  // namespace ldpks
