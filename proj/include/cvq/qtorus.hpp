#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cvq/feed.hpp"
#include "cvq/rational.hpp"

namespace cvq {

/// Laurent polynomial in a formal unit u with exact integer coefficients.
/// Throughout the quantum modules u stands for q^(1/N), so an exponent e here
/// means q^(e/N); the ambient N is carried by the lattice, not by the scalar.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(std::int64_t c) { if (c != 0) c_[0] = c; }
  QLaurent(Int c) { if (c != 0) c_[0] = std::move(c); }

  /// u^e
  static QLaurent unit(std::int64_t e) { return term(1, e); }
  static QLaurent term(Int c, std::int64_t e);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;

  QLaurent operator+(const QLaurent& o) const;
  QLaurent operator-(const QLaurent& o) const;
  QLaurent operator*(const QLaurent& o) const;
  QLaurent operator-() const;
  bool operator==(const QLaurent&) const = default;

  /// Multiplication by u^e.
  QLaurent shifted(std::int64_t e) const;
  /// The image under u -> u^(-1).
  QLaurent conjugated() const;
  /// Drops all terms with exponent > hi (used to compare series on a window).
  QLaurent truncated_above(std::int64_t hi) const;

  /// Exponent bounds; both require a nonzero polynomial.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  const std::map<std::int64_t, Int>& terms() const { return c_; }

  /// "1 + 2*u^3 - u^-1" style rendering with the given unit symbol.
  std::string str(const std::string& symbol = "u") const;

 private:
  std::map<std::int64_t, Int> c_;
};

/// A lattice with a skew-symmetric rational pairing whose values have a common
/// denominator, stored as the integer matrix of pairings in units of 1/unit_den.
struct SkewLattice {
  int rank = 0;
  std::int64_t unit_den = 1;
  std::vector<std::int64_t> gram;  // row-major, rank*rank, units of 1/unit_den

  std::int64_t pairing_units(int a, int b) const {
    return gram[static_cast<size_t>(a) * rank + b];
  }
  /// Bilinear extension, still in units of 1/unit_den.
  std::int64_t pairing_units(const std::vector<std::int64_t>& v,
                             const std::vector<std::int64_t>& w) const;

  bool operator==(const SkewLattice&) const = default;
};

/// The rank-2n lattice of the doubled torus of a feed, basis ordered as the n
/// B-directions then the n X-directions, with
///
///   <x_i, x_j> = eps_ij / d_j,   <x_i, b_j> = delta_ij / d_i,   <b_i, b_j> = 0,
///
/// in units of 1/N, N = lcm(d). The induced Weyl relations are exactly
///
///   q_j^(-eps_ij) X_i X_j = q_i^(-eps_ji) X_j X_i,
///   q_i^(-1) X_i B_i = q_i B_i X_i,   B_i X_j = X_j B_i (i != j),
///   B_i B_j = B_j B_i,
///
/// with q_i = q^(1/d_i).
SkewLattice double_torus_lattice(const Feed& f);

/// Rank-2 lattice with <e_0, e_1> = 1 and integral q-powers: the engine for
/// identities between E(a, b) monomials obeying E(v)E(w) = q^(a b' - a' b) E(v+w).
SkewLattice weyl_pair_lattice();

/// Finite sum of Weyl-normalized monomials E(v), v in the lattice, with
/// QLaurent coefficients, multiplied by E(v)E(w) = q^<v,w> E(v+w).
class QTorusElement {
 public:
  QTorusElement() = default;
  explicit QTorusElement(SkewLattice lat) : lat_(std::move(lat)) {}

  static QTorusElement monomial(SkewLattice lat, QLaurent c, std::vector<std::int64_t> v);
  /// The generator E(e_index).
  static QTorusElement basis(SkewLattice lat, int index);

  const SkewLattice& lattice() const { return lat_; }
  const std::map<std::vector<std::int64_t>, QLaurent>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// True when the element is a single monomial c * E(v); outputs are optional.
  bool single_term(QLaurent* c = nullptr, std::vector<std::int64_t>* v = nullptr) const;

  QTorusElement operator+(const QTorusElement& o) const;
  QTorusElement operator-(const QTorusElement& o) const;
  QTorusElement operator*(const QTorusElement& o) const;
  QTorusElement operator-() const;
  bool operator==(const QTorusElement&) const = default;

  /// Scalar multiple.
  QTorusElement scaled(const QLaurent& c) const;

  /// The *-involution: an anti-homomorphism fixing every E(v) and sending
  /// u -> u^(-1). Reversal of products is absorbed by the coefficient
  /// conjugation, since *E(v) = E(v) in the Weyl-normalized basis.
  QTorusElement star() const;

  /// Lines "E(v) : coefficient", lexicographically sorted by v.
  std::string str() const;

 private:
  SkewLattice lat_;
  std::map<std::vector<std::int64_t>, QLaurent> c_;

  void add_term(const std::vector<std::int64_t>& v, const QLaurent& c);
};

/// Generators of the doubled torus of f: B_i, X_i, and the composite
/// X~_i = X_i prod_j B_j^(eps_ij), which is the single monomial E(x_i + sum_j
/// eps_ij b_j) (the Weyl normalization absorbs no phase because eps_ii = 0).
QTorusElement quantum_b(const Feed& f, int i);
QTorusElement quantum_x(const Feed& f, int i);
QTorusElement quantum_tilde_x(const Feed& f, int i);

/// q_i^m as a QLaurent in u = q^(1/N), i.e. u^(m N / d_i).
QLaurent q_dir_power(const Feed& f, int i, std::int64_t m);

}  // namespace cvq
