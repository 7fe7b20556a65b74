#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cvq/feed.hpp"
#include "cvq/qtorus.hpp"

namespace cvq {

/// Power series in z truncated at a fixed z-degree, with exact QLaurent
/// coefficients and a validity window: coefficients agree with the
/// untruncated series at all q-exponents <= hi_valid. lo is a lower bound on
/// the support of every coefficient; multiplying two series tightens each
/// factor's window by the other factor's lo.
struct ZSeries {
  std::vector<QLaurent> coef;  // z-degrees 0 .. coef.size()-1
  std::int64_t lo = 0;
  std::int64_t hi_valid = 0;

  int degree_bound() const { return static_cast<int>(coef.size()) - 1; }
};

ZSeries z_one(int mz);
/// 1 + u^shift z; exact, so the window is effectively unbounded.
ZSeries z_binomial(std::int64_t shift, int mz);
ZSeries z_mul(const ZSeries& a, const ZSeries& b);

/// Expansion of prod_{i>=1} (1 + u^{s(2i-1)+a} z) to z-degree mz: the inverse
/// of the compact quantum dilogarithm series with base u^s and argument
/// scaled by u^a. Factors are taken until an omitted factor can no longer
/// touch any exponent <= qcut; hi_valid records the resulting guarantee.
/// Requires s >= 1.
ZSeries psi_inverse_series(std::int64_t s, std::int64_t a, int mz, std::int64_t qcut);

/// Outcome of a windowed coefficient comparison.
struct SeriesMatch {
  bool ok = false;
  std::int64_t window = 0;  // q-exponents compared up to here (inclusive)
  int compared = 0;         // number of coefficients compared
  int mismatched = 0;

  std::string str() const;
};

SeriesMatch z_match(const ZSeries& a, const ZSeries& b);

/// An element of the E(alpha, beta) monomial algebra together with a
/// q-exponent validity window, for the noncommutative series identities.
/// dirs lists the argument directions of the series factors multiplied into
/// the element and mbound their common argument-degree bound: commuting tail
/// terms across the other factor costs at most mbound^2 |<w, w'>| per
/// direction pair, and e_mul charges that debt against the window.
struct WindowedE {
  QTorusElement el;  // over weyl_pair_lattice()
  std::int64_t lo = 0;
  std::int64_t hi_valid = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
  std::int64_t mbound = 0;
};

WindowedE e_one();
/// Expansion of the inverse dilogarithm series with base u^s evaluated at the
/// argument u^pre E(vec), truncated at argument-degree mz.
WindowedE psi_inverse_plane(std::int64_t s, std::int64_t pre,
                            std::pair<std::int64_t, std::int64_t> vec, int mz,
                            std::int64_t qcut);
WindowedE e_mul(const WindowedE& a, const WindowedE& b);

/// Compares coefficients on the rectangle 0 <= alpha <= amax, 0 <= beta <=
/// bmax, inside the common validity window. The rectangle is chosen by the
/// caller so that both sides are complete there for the given truncations.
SeriesMatch e_match(const WindowedE& a, const WindowedE& b, std::int64_t amax,
                    std::int64_t bmax);

/// Lines "E(a,b) q^(e/N) : coeff", sorted lexicographically in (a, b, e).
std::string dump_exponent_lines(const QTorusElement& el);

/// One verified series identity; scalar is the commutative one-variable part
/// (base-splitting or functional equation), plane the E(alpha, beta) part.
struct SeriesIdentityReport {
  std::string name;
  SeriesMatch scalar;
  SeriesMatch plane;
  bool ok = false;

  std::string str() const;
};

/// Pentagon: with X = E(1,0), Y = E(0,1), so that XY = q^2 YX,
///   Psi(Y)^-1 Psi(X)^-1 = Psi(X)^-1 Psi(W)^-1 Psi(Y)^-1,
/// where W = q Y X = E(1,1) is the Weyl-normalized product (the identity
/// fails at order E(1,1) for the other normalizations of the middle
/// argument). The scalar slot carries the functional equation
/// Psi(q^2 z) = (1 + qz) Psi(z) in inverse-series form.
SeriesIdentityReport verify_pentagon_series(int mz, std::int64_t qcut);

/// Hexagon: base splitting Psi_{q^2}(qz) Psi_{q^2}(q^-1 z) = Psi_q(z), and
/// the six-factor identity
///   Psi_{q^2}(E(2,0)) Psi_q(E(0,1))
///     = Psi_q(E(0,1)) Psi_{q^2}(E(2,2)) Psi_q(E(2,1)) Psi_{q^2}(E(2,0)),
/// both verified in inverse-series form.
SeriesIdentityReport verify_hexagon_series(int mz, std::int64_t qcut);

/// Octagon: base splitting Psi_{q^3}(q^-2 z) Psi_{q^3}(z) Psi_{q^3}(q^2 z) =
/// Psi_q(z), and the six-factor identity
///   Psi_{q^3}(E(3,0)) Psi_q(E(0,1)) = Psi_q(E(0,1)) Psi_{q^3}(E(3,3))
///     Psi_q(E(3,2)) Psi_{q^3}(E(6,3)) Psi_q(E(3,1)) Psi_{q^3}(E(3,0)),
/// both in inverse-series form.
SeriesIdentityReport verify_octagon_series(int mz, std::int64_t qcut);

/// Conjugation by the dilogarithm-series ratio in X_k and X~_k, computed with
/// raw truncated torus arithmetic (series inversion included), compared
/// against the closed-form ladders of quantum_mutation_twist for every
/// generator of the doubled torus.
struct ConjugationFormReport {
  Feed feed;
  int k = 0;
  int order = 0;
  std::int64_t qcut = 0;
  std::int64_t window = 0;
  std::vector<bool> generator_ok;
  bool ok = false;

  std::string str() const;
};

ConjugationFormReport verify_conjugation_form(const Feed& f, int k, int order,
                                              std::int64_t qcut);

}  // namespace cvq
