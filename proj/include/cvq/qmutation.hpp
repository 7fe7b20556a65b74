#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cvq/feed.hpp"
#include "cvq/qtorus.hpp"

namespace cvq {

/// A monomial-to-monomial algebra map between two torus algebras, given by the
/// images of the source basis directions: basis a maps to u^pre[a] E(w[a]).
/// The image of a general E(v) is computed through the normal-ordering
/// bookkeeping, so the map is well defined on the Weyl basis regardless of the
/// decomposition order.
struct MonomialImages {
  SkewLattice src;
  SkewLattice tgt;
  std::vector<std::int64_t> pre;
  std::vector<std::vector<std::int64_t>> w;
};

QTorusElement apply_monomial_images(const MonomialImages& m, const QTorusElement& el);

/// True when <w[a], w[b]> in the target equals <e_a, e_b> in the source for
/// all pairs, which is what makes the map an algebra homomorphism.
bool images_preserve_pairings(const MonomialImages& m);

/// Images of the monomial part of the quantum mutation at k: generators of the
/// seed mutated at k are expressed in the generators of base,
///
///   B'_i -> B_i (i != k),       B'_k -> B_k^(-1) prod_j B_j^([-eps_kj]_+),
///   X'_i -> X_i X_k^([eps_ik]_+) up to the q-power making the image
///           Weyl-normalized (i != k),                X'_k -> X_k^(-1).
MonomialImages mutation_monomial_images(const Feed& base, int k);

/// The monomial part applied to an element written in the primed generators.
QTorusElement quantum_mutation_monomial(const Feed& base, int k, const QTorusElement& el);

/// One binomial family of the localization: factors (1 + u^shift E(z)) where z
/// is the X_k direction (family 0) or the X~_k direction (family 1). The two
/// directions pair to zero, so all factors commute with each other.
struct BinKey {
  int family = 0;
  std::int64_t shift = 0;
  auto operator<=>(const BinKey&) const = default;
};

using BinPowers = std::map<BinKey, std::int64_t>;

/// An element of the torus algebra of a feed localized at the factors
/// (1 + u^odd X_k) and (1 + u^odd X~_k): a finite sum of terms
///
///   coeff * E(v) * prod (1 + u^shift E(z_family))^power,    power in Z.
///
/// The representation is normalized additively (like terms merged) but not
/// rationally, so equality goes through clearing denominators and expanding.
class TwistedRationalElement {
 public:
  TwistedRationalElement() = default;
  TwistedRationalElement(Feed f, int k);

  static TwistedRationalElement from_torus(const Feed& f, int k, const QTorusElement& el);

  const Feed& feed() const { return f_; }
  int direction() const { return k_; }
  const SkewLattice& lattice() const { return lat_; }

  /// Terms keyed by (exponent vector, binomial powers).
  using TermKey = std::pair<std::vector<std::int64_t>, BinPowers>;
  const std::map<TermKey, QLaurent>& terms() const { return terms_; }

  void add_term(std::vector<std::int64_t> evec, BinPowers bins, const QLaurent& c);

  TwistedRationalElement operator+(const TwistedRationalElement& o) const;
  TwistedRationalElement operator-(const TwistedRationalElement& o) const;
  TwistedRationalElement operator*(const TwistedRationalElement& o) const;
  TwistedRationalElement scaled(const QLaurent& c) const;

  /// Multiplies by the common denominator (collected into denom if given) and
  /// expands all remaining binomials into the plain torus algebra.
  QTorusElement cleared_numerator(BinPowers* denom = nullptr) const;

  /// Expansion into the plain torus algebra; requires no negative powers.
  QTorusElement expanded() const;

  bool is_zero() const;
  /// Equality as localized elements (independent of representation).
  bool equivalent(const TwistedRationalElement& o) const;

  std::string str() const;

  /// The direction vector of a binomial family in this feed's lattice.
  std::vector<std::int64_t> family_vector(int family) const;

 private:
  Feed f_;
  int k_ = 0;
  SkewLattice lat_;
  std::map<TermKey, QLaurent> terms_;
};

/// The automorphism part of the quantum mutation at k: conjugation by the
/// ratio of quantum dilogarithm series in X_k and X~_k. On a monomial E(v) it
/// multiplies from the right by the finite ladders
///
///   prod_{r=1}^{m} (1 + q_k^{2r-1} X_k)^{sgn}            m = |d_k <x_k, v>|,
///
/// and the inverse ladder in X~_k, with sgn and the ladder side determined by
/// the signs of the pairings. Generators come out as the closed forms
///
///   B_k -> B_k (1 + q_k X_k)(1 + q_k X~_k)^(-1),
///   X_i -> X_i prod_{r=1}^{|eps_ik|} (1 + q_k^{sgn(-eps_ik)(2r-1)} X_k)^{sgn(-eps_ik)},
///
/// with B_i (i != k), X_k and X~_k fixed.
TwistedRationalElement quantum_mutation_twist(const Feed& f, int k, const QTorusElement& el);

/// Same automorphism on an already localized element; the binomial factors are
/// fixed because X_k and X~_k are.
TwistedRationalElement quantum_mutation_twist(const Feed& f, int k,
                                              const TwistedRationalElement& el);

/// The monomial part applied to a localized element over the seed mutated at
/// k: monomials map through mutation_monomial_images(base, k), and binomial
/// arguments X'_k, X~'_k land on X_k^(-1), X~_k^(-1), which are rewritten into
/// standard-direction factors by extracting a monomial.
TwistedRationalElement quantum_mutation_pull(const Feed& base, int k,
                                             const TwistedRationalElement& el);

/// Full quantum mutation at k applied to an element written in the primed
/// generators: the monomial part followed by the automorphism part.
TwistedRationalElement quantum_mutation(const Feed& base, int k, const QTorusElement& el);

/// Round trip across the mutation at k and back. Each generator of the base
/// torus must return to itself exactly, all binomial factors cancelling in the
/// localized arithmetic.
struct QuantumInvolutionReport {
  Feed feed;
  int k = 0;
  std::vector<bool> generator_ok;
  bool ok = false;

  std::string str() const;
};

QuantumInvolutionReport verify_quantum_involution(const Feed& f, int k);

}  // namespace cvq
