#pragma once

#include <string>
#include <vector>

#include "cvq/classical.hpp"
#include "cvq/feed.hpp"

namespace cvq {

/// Canonical representative of (d, eps) under simultaneous relabeling: the
/// lexicographically least image over all permutations, d compared first.
/// Two feeds get the same fingerprint exactly when one is a relabeling of the
/// other.
struct FeedFingerprint {
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> eps;

  auto operator<=>(const FeedFingerprint&) const = default;
  std::string str() const;
};

FeedFingerprint fingerprint(const Feed& f);

/// Mutation in direction k of (a representative of) node `from` lands in node
/// `to`. Directions refer to the representative discovered first, so edge
/// labels are only canonical up to the relabeling hidden in the fingerprint.
struct ExploreEdge {
  int from = 0;
  int k = 0;
  int to = 0;

  auto operator<=>(const ExploreEdge&) const = default;
};

/// Breadth-first closure of the mutation graph on fingerprints, nodes indexed
/// in discovery order. closed means every direction out of every node lands on
/// a known node, i.e. the full mutation class was found within the depth
/// budget; when a new fingerprint shows up past the budget it is dropped and
/// closed is false.
struct ExploreResult {
  std::vector<FeedFingerprint> nodes;
  std::vector<ExploreEdge> edges;
  bool closed = false;
  int depth_reached = 0;

  std::string str() const;
  std::string dot() const;
};

ExploreResult explore(const Feed& f, int max_depth);

/// Pushes every relabeling step to the tail of the word and cancels adjacent
/// equal mutations: [p q, m_j] acts like [m_{q^-1(j)}, p q]. The result is an
/// equivalent word of the form (mutations..., one optional relabeling); a word
/// is a padded rewriting of a shorter one exactly when its normal form is
/// shorter than it.
Word word_normal_form(int n, const Word& w);

/// A word over single mutations and transpositions that returns the feed to
/// itself and fixes every coordinate at `samples` fresh random positive
/// rational points. The certificate is probabilistic (generic-point
/// agreement), not a symbolic identity. `family` cross-references the word
/// against the known trivial generators: "mutation square", "relabeling
/// square", an "<type> cycle" whose normal form matches the (h+2)-gon of a
/// finite rank-2 pair, or "other".
struct TrivialWordReport {
  Word word;
  std::string family;
  SeedKind kind = SeedKind::X;
  bool pointwise = false;
  int samples = 0;

  std::string str() const;
};

/// Enumerates words up to max_len, prunes immediately-cancelling pairs
/// (adjacent equal mutations, adjacent relabelings) and padded rewritings
/// (words whose normal form is shorter), and certifies the survivors whose
/// feed returns pointwise. The length-2 squares are reported first; the rest
/// are sorted by length, then text. Requires samples >= 20.
std::vector<TrivialWordReport> find_trivial_words(const Feed& f, int max_len, SeedKind kind,
                                                  int samples, std::uint64_t seed = 7001);

}  // namespace cvq
