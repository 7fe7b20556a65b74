#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvq/rational.hpp"

namespace cvq {

/// Exchange data of a seed: an integer n x n matrix eps together with a
/// positive integer skew-symmetrizer d, subject to
///
///   eps[i][j] / d[j] == -eps[j][i] / d[i]   for all i, j.
///
/// In particular eps has zero diagonal. N denotes lcm(d); the quantum modules
/// work with formal q^(1/N) and attach q_i := q^(N/d_i * 1/N) to direction i.
struct Feed {
  int n = 0;
  std::vector<std::int64_t> eps;  // row-major, n*n
  std::vector<std::int64_t> d;    // n entries, all >= 1

  std::int64_t at(int i, int j) const { return eps[static_cast<size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return eps[static_cast<size_t>(i) * n + j]; }

  std::int64_t lcm_d() const;
  /// Exponent of q^(1/N) giving q_i, i.e. N / d[i].
  std::int64_t q_unit_exponent(int i) const { return lcm_d() / d[static_cast<size_t>(i)]; }

  bool operator==(const Feed&) const = default;
};

enum class SeedKind { A, X, D };

/// A feed together with the variable kind it carries and display labels.
/// A- and X-seeds carry n labels; D-seeds carry 2n (first the B row, then X).
struct Seed {
  Feed feed;
  SeedKind kind = SeedKind::X;
  std::vector<std::string> labels;
};

enum class Rank2Type { A1xA1, A2, B2, G2 };

/// Validates the compatibility of (eps, d) without constructing a Feed.
bool check_skew_symmetrizable(int n, const std::vector<std::int64_t>& eps,
                              const std::vector<std::int64_t>& d);

/// Builds a Feed, throwing std::invalid_argument on malformed data.
Feed make_feed(int n, std::vector<std::int64_t> eps, std::vector<std::int64_t> d);

Seed make_seed(Feed feed, SeedKind kind, std::vector<std::string> labels = {});

std::vector<std::string> default_labels(int n, SeedKind kind);

/// Matrix mutation in direction k applied to eps alone (d is untouched by
/// mutation, and the rule does not consume d).
std::vector<std::int64_t> mutate_matrix(int n, const std::vector<std::int64_t>& eps, int k);

/// Mutation of the full feed in direction k.
Feed mutate_feed(const Feed& f, int k);

/// Checks that mutating twice in direction k returns the original feed.
bool mutate_involutive_check(const Feed& f, int k);

/// Relabeling by a permutation sigma (sigma[i] is the new index of old i):
/// d'[sigma[i]] = d[i], eps'[sigma[i]][sigma[j]] = eps[i][j].
Feed permute_feed(const Feed& f, const std::vector<int>& sigma);

Seed permute_seed(const Seed& s, const std::vector<int>& sigma);

/// Composition of permutations acting as relabelings: returns sigma after tau,
/// i.e. the permutation sending i to sigma[tau[i]].
std::vector<int> compose_perm(const std::vector<int>& sigma, const std::vector<int>& tau);

std::vector<int> invert_perm(const std::vector<int>& sigma);

bool is_identity_perm(const std::vector<int>& sigma);

/// The dual exchange data: eps_dual[i][j] = d[i] * eps[i][j] / d[j], which is
/// always the integer -eps[j][i]; the dual symmetrizer entries are 1/d[i].
struct DualFeed {
  int n = 0;
  std::vector<std::int64_t> eps;
  std::vector<Rational> d;

  std::int64_t at(int i, int j) const { return eps[static_cast<size_t>(i) * n + j]; }
};

DualFeed langlands_dual(const Feed& f);
DualFeed langlands_dual(const DualFeed& f);

/// Recovers a Feed from dual data by clearing denominators in d (scales the
/// symmetrizer by lcm of the denominators; eps is unchanged).
Feed dual_as_feed(const DualFeed& f);

/// Classifies the ordered pair (i, j): the pair is of finite rank-2 type with
/// parameter p = |eps[i][j]| in {0,1,2,3} when eps[i][j] == -p * eps[j][i].
std::optional<Rank2Type> rank2_classify(const Feed& f, int i, int j);

/// Coxeter number of a rank-2 type: 2, 3, 4, 6.
int rank2_coxeter_number(Rank2Type t);

/// One off-block entry of an embedded feed: eps[row][col] = value. The
/// mirrored entry is derived from the symmetrizer; non-integral mirrors are
/// rejected.
struct Coupling {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
};

/// Builds an n x n feed whose (i, j) pair realizes the given rank-2 type with
/// eps[i][j] = +p, embedded in zero background plus the given couplings. The
/// symmetrizer d must be full length and compatible with the type (d[j] equal
/// to p * d[i] for B2/G2).
Feed embed_rank2(int n, int i, int j, Rank2Type t, std::vector<std::int64_t> d,
                 const std::vector<Coupling>& couplings = {});

std::string rank2_name(Rank2Type t);
std::string seed_kind_name(SeedKind k);

}  // namespace cvq
