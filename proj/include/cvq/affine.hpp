#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvq/feed.hpp"
#include "cvq/matrix.hpp"

namespace cvq {

/// Element (c, t) of the special affine shift group: |det c| = 1, t a rational
/// row vector. Acts on row vectors by a -> a * c + t. Composition matches
/// operator products left to right: the word S_1 S_2 corresponds to the group
/// product (c_1, t_1)(c_2, t_2) = (c_1 c_2, t_1 c_2 + t_2).
struct AffineElement {
  RatMatrix c;
  std::vector<Rational> t;

  static AffineElement identity(int n);
  /// Throws std::invalid_argument unless |det c| = 1.
  static AffineElement make(RatMatrix c, std::vector<Rational> t);
  static AffineElement from_matrix(RatMatrix c);

  int size() const { return c.size(); }
  bool is_identity() const;
  std::vector<Rational> apply(const std::vector<Rational>& a) const;
  std::string str() const;
  bool operator==(const AffineElement&) const = default;
};

AffineElement compose(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);

/// Affine element of the shift operator attached to the mutation at k
/// (translation part zero; the matrix is its own inverse).
AffineElement mutation_c_element(const Feed& f, int k);

/// Affine element of the Gaussian pair exp(x_k^2 / 4 pi i h_k)
/// exp(-xt_k^2 / 4 pi i h_k); unipotent, translation part zero.
AffineElement gaussian_element(const Feed& f, int k);

/// Affine element of the Gaussian pair at a linear combination
/// y = sum_m coeff[m] x_m (with its tilde partner), scaled by the h-parameter
/// of direction s: exp(y^2 / 4 pi i h_s) exp(-yt^2 / 4 pi i h_s).
/// Conjugation shears each generator z by (bracket(y, z) / h_s) y minus the
/// tilde counterpart, which keeps the p/q span invariant; the resulting
/// matrix is I + D with D supported on the columns where coeff is nonzero.
AffineElement gaussian_combo_element(const Feed& f,
                                     const std::vector<std::int64_t>& coeff,
                                     int s);

/// Relabeling operator for sigma (vertex i of the source is vertex sigma[i]
/// of the target); translation part zero.
AffineElement permutation_element(const std::vector<int>& sigma);

/// The five trivial-word relations whose phase constants the toolkit checks.
enum class PhaseRelation { A1, A1xA1, A2, B2, G2 };

std::string relation_name(PhaseRelation r);
PhaseRelation relation_of(Rank2Type t);
/// Number of mutations in the relation (2, 4, 5, 6, 8).
int relation_length(PhaseRelation r);

enum class ResidualStepKind { MutationShift, GaussianShift, PermutationShift };

/// One factor of a residual word. `element` already includes the inversion
/// when `inverted` is set; `feed` and `direction` identify where a mutation
/// or Gaussian factor comes from, `sigma` a permutation factor.
struct ResidualStep {
  ResidualStepKind kind = ResidualStepKind::MutationShift;
  bool inverted = false;
  AffineElement element;
  Feed feed;
  int direction = -1;
  std::vector<int> sigma;
  std::string note;

  std::string str() const;
};

/// The affine remainder of a trivial mutation sequence: the word of shift
/// group elements left after the dilogarithm factors of the two paths cancel
/// against each other. The sequence realizes the relation exactly when the
/// word composes to the identity.
struct ResidualWord {
  PhaseRelation relation = PhaseRelation::A1;
  Feed base;
  int i = 0;
  int j = 0;
  std::vector<ResidualStep> steps;

  AffineElement composed() const;
  std::string str() const;
};

/// Builds the residual word of the relation at directions (i, j) of f.
/// For the rank-1 relation j is ignored. The rank-2 relations require the
/// matching pattern eps[i][j] = -p eps[j][i], |eps[i][j]| = p at (i, j);
/// violations raise std::invalid_argument. Both signs of eps[i][j] are
/// handled; the Gaussian factors differ between the two orientations because
/// the sign-flipping side of the relation swaps.
ResidualWord build_residual_word(PhaseRelation rel, const Feed& f, int i,
                                 int j);

struct PhaseReport {
  ResidualWord word;
  AffineElement composed;
  bool identity = false;

  std::string str() const;
};

/// Composes the residual word and reports whether the phase constant of the
/// relation is 1 (equivalently, the word is the identity element).
PhaseReport verify_phase(PhaseRelation rel, const Feed& f, int i, int j);

struct PhaseCase {
  std::string label;
  PhaseRelation relation = PhaseRelation::A1;
  Feed feed;
  int i = 0;
  int j = 0;
};

/// Built-in verification suite: at least three feeds per relation, covering
/// both orientations, scaled symmetrizers, and embeddings with couplings.
std::vector<PhaseCase> builtin_phase_cases();

}  // namespace cvq
