#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ldpks {

// A strict total order over the alternatives 0..m-1. order()[0] is the most
// preferred alternative and position(a) is the rank of alternative a, so
// position(order()[k]) == k.
class Ranking {
 public:
  explicit Ranking(std::vector<int> order) : order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    if (m == 0) throw std::invalid_argument("ranking: order must not be empty");
    position_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
      const int alt = order_[pos];
      if (alt < 0 || alt >= m || position_[alt] != -1)
        throw std::invalid_argument("ranking: order is not a permutation of 0..m-1");
      position_[alt] = pos;
    }
  }

  static Ranking identity(int m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    return Ranking(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  int at(int pos) const { return order_[pos]; }
  int position(int alt) const { return position_[alt]; }
  bool prefers(int a, int b) const { return position_[a] < position_[b]; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<int> order_;
  std::vector<int> position_;  // inverse lookup alternative -> rank
};

// A combined profile: the rankings of n agents over the same alternatives.
// Immutable after construction.
class Profile {
 public:
  explicit Profile(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
    if (rankings_.empty()) throw std::invalid_argument("profile: need at least one ranking");
    const int m = rankings_.front().size();
    for (const Ranking& r : rankings_)
      if (r.size() != m)
        throw std::invalid_argument("profile: rankings cover different alternative counts");
  }

  int agent_count() const { return static_cast<int>(rankings_.size()); }
  int alternative_count() const { return rankings_.front().size(); }
  const Ranking& operator[](int i) const { return rankings_[i]; }
  auto begin() const { return rankings_.begin(); }
  auto end() const { return rankings_.end(); }

 private:
  std::vector<Ranking> rankings_;
};

// Canonical alternative pairs (j, l) with j < l, flattened row by row:
// (0,1), (0,2), ..., (0,m-1), (1,2), ...
inline int pair_count(int m) { return m * (m - 1) / 2; }

inline int pair_index(int j, int l, int m) {
  return j * m - j * (j + 1) / 2 + (l - j - 1);
}

inline std::pair<int, int> pair_at(int index, int m) {
  for (int j = 0; j < m - 1; ++j) {
    const int row = m - 1 - j;
    if (index < row) return {j, j + 1 + index};
    index -= row;
  }
  throw std::out_of_range("pair_at: index exceeds C(m,2)");
}

// Number of alternative pairs ordered oppositely by the two rankings.
inline int kendall_tau(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kendall_tau: rankings have different sizes");
  const int m = a.size();
  int discordant = 0;
  for (int j = 0; j < m; ++j)
    for (int l = j + 1; l < m; ++l)
      if (a.prefers(j, l) != b.prefers(j, l)) ++discordant;
  return discordant;
}

// Mean Kendall tau distance from r to every ranking of the profile;
// normalized divides by m(m-1)/2 so the result lies in [0, 1].
inline double avg_kendall_tau(const Ranking& r, const Profile& p, bool normalized = false) {
  if (r.size() != p.alternative_count())
    throw std::invalid_argument("avg_kendall_tau: ranking does not match the profile");
  long long total = 0;
  for (const Ranking& member : p) total += kendall_tau(r, member);
  double avg = static_cast<double>(total) / p.agent_count();
  if (normalized) {
    const int max_pairs = pair_count(r.size());
    avg = max_pairs > 0 ? avg / max_pairs : 0.0;
  }
  return avg;
}

// Antisymmetric pairwise score matrix; only the canonical j < l triangle is
// stored. score(j, l) > 0 means alternative j beats l in aggregate.
class CmpProfile {
 public:
  explicit CmpProfile(int m) : m_(m), scores_(pair_count(m), 0.0) {
    if (m < 1) throw std::invalid_argument("cmp profile: need at least one alternative");
  }

  int alternative_count() const { return m_; }

  double score(int j, int l) const {
    check_pair(j, l);
    return j < l ? scores_[pair_index(j, l, m_)] : -scores_[pair_index(l, j, m_)];
  }

  void set_score(int j, int l, double value) {
    check_pair(j, l);
    if (j < l)
      scores_[pair_index(j, l, m_)] = value;
    else
      scores_[pair_index(l, j, m_)] = -value;
  }

  // Canonical-triangle scores indexed by pair_index.
  const std::vector<double>& canonical_scores() const { return scores_; }
  double& canonical_score(int pair_idx) { return scores_[pair_idx]; }

 private:
  void check_pair(int j, int l) const {
    if (j < 0 || l < 0 || j >= m_ || l >= m_ || j == l)
      throw std::invalid_argument("cmp profile: invalid alternative pair");
  }

  int m_;
  std::vector<double> scores_;
};

// Exact pairwise comparison profile: score(j, l) = C_jl - C_lj where C_jl
// counts the agents ranking j above l.
inline CmpProfile exact_cmp(const Profile& p) {
  const int m = p.alternative_count();
  CmpProfile cmp(m);
  for (const Ranking& r : p)
    for (int j = 0; j < m; ++j)
      for (int l = j + 1; l < m; ++l)
        cmp.canonical_score(pair_index(j, l, m)) += r.prefers(j, l) ? 1.0 : -1.0;
  return cmp;
}

}  // namespace ldpks
