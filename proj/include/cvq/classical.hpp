#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cvq/feed.hpp"

namespace cvq {

/// A point with positive rational coordinates, one per variable of the seed
/// kind: n values for A- and X-seeds, 2n for D-seeds (B block then X block).
struct PointState {
  SeedKind kind = SeedKind::X;
  std::vector<Rational> v;

  bool operator==(const PointState&) const = default;
};

PointState random_point(SeedKind kind, int n, std::mt19937_64& rng, int max_val = 1000);

/// Exact mutation of a point in direction k. The A rule trades A_k for the
/// two-term exchange binomial; the X rule inverts X_k and corrects the
/// neighbours; the D rule applies the X rule and the B_k exchange formula.
PointState mutate_point(const Feed& f, const PointState& p, int k);

PointState permute_point(const PointState& p, const std::vector<int>& sigma);

/// tilde-X coordinates of a D-point: Xt_i = X_i * prod_j B_j^eps_ij.
std::vector<Rational> tilde_x(const Feed& f, const PointState& p);

/// Pullback of X coordinates along the p-map from an A-point:
/// X_i = prod_j A_j^eps_ij.
std::vector<Rational> p_pullback(const Feed& f, const PointState& p);

struct WordStep {
  enum Kind { Mutate, Permute } kind = Mutate;
  int k = 0;                // mutation direction (0-based)
  std::vector<int> sigma;   // relabeling for Permute
};

using Word = std::vector<WordStep>;

WordStep step_mutate(int k);
WordStep step_transpose(int n, int i, int j);
WordStep step_permute(std::vector<int> sigma);

/// Text syntax: whitespace-separated tokens, "mK" for mutation in direction K
/// and "p(a b ...)" for a cycle, all 1-based. Example: "m1 p(1 2) m1".
Word parse_word(const std::string& text, int n);
std::string word_to_string(const Word& w);

struct TrajState {
  Feed feed;
  PointState pt;
};

/// Applies the steps left to right, transforming feed and point together.
TrajState apply_word(Feed f, PointState p, const Word& w);

/// Feed-level application only.
Feed apply_word_feed(Feed f, const Word& w);

/// The standard trivial cycle of a finite rank-2 pair: (h+2) repetitions of
/// [mutate i, transpose (i j)], where h is the Coxeter number.
Word h_plus_2_gon_word(const Feed& f, int i, int j);

/// Samples random points and checks that the (h+2)-gon word returns every
/// coordinate exactly; requires (i, j) to classify as a finite rank-2 pair.
bool verify_h_plus_2_gon(const Feed& f, int i, int j, SeedKind kind, int samples,
                         std::uint64_t seed);

/// Exact pointwise triviality of an arbitrary word at random sample points.
bool word_trivial_at_samples(const Feed& f, const Word& w, SeedKind kind, int samples,
                             std::uint64_t seed);

}  // namespace cvq
