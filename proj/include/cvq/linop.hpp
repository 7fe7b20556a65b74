#pragma once

#include <map>
#include <string>
#include <vector>

#include "cvq/feed.hpp"
#include "cvq/matrix.hpp"

namespace cvq {

/// Laurent polynomial in the formal deformation parameter h, with exact
/// rational coefficients. Printed with "h" for the parameter.
class HbarScalar {
 public:
  HbarScalar() = default;
  HbarScalar(Rational c) {
    if (c != 0) c_[0] = std::move(c);
  }
  HbarScalar(std::int64_t c) : HbarScalar(Rational(c)) {}

  static HbarScalar term(Rational c, int degree);

  bool is_zero() const { return c_.empty(); }
  /// Zero or a single degree-0 term with integer value.
  bool is_integer() const;

  HbarScalar operator+(const HbarScalar& o) const;
  HbarScalar operator-(const HbarScalar& o) const;
  HbarScalar operator*(const HbarScalar& o) const;
  HbarScalar operator-() const;
  bool operator==(const HbarScalar&) const = default;

  const std::map<int, Rational>& terms() const { return c_; }
  std::string str() const;

 private:
  std::map<int, Rational> c_;  // degree -> nonzero coefficient
};

/// Formal linear combination sum_i alpha_i p_i + sum_i beta_i q_i of the
/// canonical momentum and position generators. Identity components are not
/// carried; commutators of these operators are scalar and are returned by
/// bracket() instead.
struct LinOp {
  std::vector<HbarScalar> alpha;  // p-coefficients
  std::vector<HbarScalar> beta;   // q-coefficients

  static LinOp zero(int n);
  static LinOp p(int n, int i);
  static LinOp q(int n, int i);

  int size() const { return static_cast<int>(alpha.size()); }
  bool is_zero() const;

  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp operator-() const;
  LinOp operator*(const HbarScalar& s) const;
  bool operator==(const LinOp&) const = default;

  std::string str() const;
};

/// Scalar part of the commutator: [a, b] = tau * bracket(a, b) * id with
/// tau = 2*pi*sqrt(-1). Equals h * sum_i (alpha_i beta'_i - beta_i alpha'_i).
HbarScalar bracket(const LinOp& a, const LinOp& b);

/// True iff bracket(a, b) = 0; then unitary functions of the two operators
/// commute and may be reordered freely.
bool commute(const LinOp& a, const LinOp& b);

/// Coefficient conventions for the position/momentum realization of the
/// generators attached to a feed. Both flavors satisfy the Heisenberg
/// relations and the tilde identity xt_i = x_i + sum_j eps_ij b_j, but only
/// Old is compatible with the mutation shift (verify_shift_conjugation_x).
enum class RepFlavor { Old, New };

struct RepOps {
  int n = 0;
  RepFlavor flavor = RepFlavor::Old;
  std::vector<LinOp> b, x, xt;
};

/// Old: b_i = 2 q_i, x_i = (1/2) d_i^{-1} p_i - sum_j eps_ij q_j,
///      xt_i = (1/2) d_i^{-1} p_i + sum_j eps_ij q_j.
/// New: b_i = q_i, x_i = d_i^{-1} p_i - sum_j [eps_ij]_+ q_j,
///      xt_i = d_i^{-1} p_i - sum_j [-eps_ij]_+ q_j.
RepOps build_rep(const Feed& f, RepFlavor flavor);

/// Rescaled partners op_i -> (d_i / h) op_i. Brackets of a plain generator
/// against a rescaled one are integers, e.g. bracket(x_i, checked b_j)
/// = delta_ij and bracket(x_i, checked x_j) = eps_ij.
RepOps build_checked(const RepOps& rep, const Feed& f);

/// Conjugation action of the shift operator attached to an invertible
/// rational matrix c: p-coefficients transform by rows of c^{-1},
/// q-coefficients by columns of c. Preserves bracket().
LinOp conjugate_by_matrix(const RatMatrix& c, const LinOp& op);

/// Shift matrix intertwining a mutation in direction k after its dilogarithm
/// factors are stripped: c_kk = -1, c_ik = [-eps_ki]_+ for i != k, identity
/// elsewhere. Self-inverse.
RatMatrix mutation_shift_matrix(const Feed& f, int k);

/// Shift matrix of the Gaussian factor exp(x_k^2 / (4 pi i h_k)) *
/// exp(-xt_k^2 / (4 pi i h_k)): c_ii = 1, c_ik = -eps_ki for i != k.
/// Unipotent.
RatMatrix gaussian_shift_matrix(const Feed& f, int k);

/// Conjugates the b-generators of the mutated feed by the mutation shift
/// matrix and compares with the closed forms
///   b'_i -> b_i (i != k),  b'_k -> -b_k + sum_j [-eps_kj]_+ b_j.
/// Holds for both flavors.
bool verify_shift_conjugation_b(const Feed& f, int k, RepFlavor flavor);

/// Outcome of conjugating the x- and tilde-x-generators of the mutated feed
/// by the mutation shift matrix, compared against
///   x'_i -> x_i + [eps_ik]_+ x_k (i != k),  x'_k -> -x_k,
/// and the same shapes with tilde. Old always matches. New fails whenever
/// row k of eps is nonzero; the residual at direction k is
/// -sum_j |eps_kj| q_j for both x and tilde-x.
struct ShiftConjugationXReport {
  int n = 0;
  int k = 0;
  bool old_ok = false;
  bool new_ok = false;
  // residual[i] = conjugated image of generator i minus its expected value
  std::vector<LinOp> old_residual_x, old_residual_xt;
  std::vector<LinOp> new_residual_x, new_residual_xt;

  std::string str() const;
};

ShiftConjugationXReport verify_shift_conjugation_x(const Feed& f, int k);

}  // namespace cvq
