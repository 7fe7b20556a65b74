#include "cvq/qseries.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "cvq/qmutation.hpp"

namespace cvq {
namespace {

constexpr std::int64_t kExactWindow = std::numeric_limits<std::int64_t>::max() / 4;

QTorusElement lattice_one(const SkewLattice& lat) {
  return QTorusElement::monomial(lat, QLaurent(1),
                                 std::vector<std::int64_t>(static_cast<size_t>(lat.rank), 0));
}

QTorusElement truncate_exponents(const QTorusElement& el, std::int64_t hi) {
  QTorusElement out(el.lattice());
  for (const auto& [v, c] : el.terms()) {
    QLaurent t = c.truncated_above(hi);
    if (!t.is_zero()) out = out + QTorusElement::monomial(el.lattice(), t, v);
  }
  return out;
}

// Compares two windowed products built at a given internal cutoff.  When the
// phase debt charged by e_mul leaves the match window short of the requested
// cutoff, rebuilds both sides with the deficit added so the comparison still
// covers every exponent up to qcut.
template <typename BuildL, typename BuildR>
SeriesMatch match_to_cutoff(const BuildL& lhs, const BuildR& rhs, std::int64_t amax,
                            std::int64_t bmax, std::int64_t qcut) {
  std::int64_t internal = qcut;
  SeriesMatch m = e_match(lhs(internal), rhs(internal), amax, bmax);
  for (int pass = 0; pass < 3 && m.window < qcut; ++pass) {
    internal += qcut - m.window;
    m = e_match(lhs(internal), rhs(internal), amax, bmax);
  }
  return m;
}

}  // namespace

ZSeries z_one(int mz) {
  ZSeries out;
  out.coef.assign(static_cast<size_t>(mz) + 1, QLaurent());
  out.coef[0] = QLaurent(1);
  out.lo = 0;
  out.hi_valid = kExactWindow;
  return out;
}

ZSeries z_binomial(std::int64_t shift, int mz) {
  ZSeries out = z_one(mz);
  if (mz >= 1) out.coef[1] = QLaurent::unit(shift);
  out.lo = shift < 0 ? shift : 0;
  return out;
}

ZSeries z_mul(const ZSeries& a, const ZSeries& b) {
  ZSeries out;
  int mz = std::min(a.degree_bound(), b.degree_bound());
  out.coef.assign(static_cast<size_t>(mz) + 1, QLaurent());
  for (int i = 0; i <= mz; ++i)
    for (int j = 0; i + j <= mz; ++j)
      out.coef[static_cast<size_t>(i + j)] =
          out.coef[static_cast<size_t>(i + j)] +
          a.coef[static_cast<size_t>(i)] * b.coef[static_cast<size_t>(j)];
  out.lo = a.lo + b.lo;
  out.hi_valid = std::min(a.hi_valid + b.lo, b.hi_valid + a.lo);
  return out;
}

ZSeries psi_inverse_series(std::int64_t s, std::int64_t a, int mz, std::int64_t qcut) {
  if (s < 1) throw std::invalid_argument("psi_inverse_series: base exponent must be >= 1");
  ZSeries out = z_one(mz);
  std::int64_t neg_sum = 0;
  for (std::int64_t i = 1;; ++i) {
    std::int64_t fexp = s * (2 * i - 1) + a;
    // Any contribution involving an omitted factor has exponent at least
    // fexp plus the sum of the negative kept factor exponents.
    if (fexp >= 0 && fexp + neg_sum > qcut) {
      out.hi_valid = fexp + neg_sum - 1;
      break;
    }
    for (int m = out.degree_bound(); m >= 1; --m)
      out.coef[static_cast<size_t>(m)] =
          out.coef[static_cast<size_t>(m)] +
          out.coef[static_cast<size_t>(m - 1)].shifted(fexp);
    if (fexp < 0) neg_sum += fexp;
    if (i > 1000000) throw std::logic_error("psi_inverse_series: runaway factor count");
  }
  out.lo = 0;
  for (const auto& c : out.coef)
    if (!c.is_zero() && c.min_exponent() < out.lo) out.lo = c.min_exponent();
  return out;
}

SeriesMatch z_match(const ZSeries& a, const ZSeries& b) {
  SeriesMatch m;
  m.window = std::min(a.hi_valid, b.hi_valid);
  int mz = std::min(a.degree_bound(), b.degree_bound());
  for (int d = 0; d <= mz; ++d) {
    ++m.compared;
    if (a.coef[static_cast<size_t>(d)].truncated_above(m.window) !=
        b.coef[static_cast<size_t>(d)].truncated_above(m.window))
      ++m.mismatched;
  }
  m.ok = m.compared > 0 && m.mismatched == 0;
  return m;
}

std::string SeriesMatch::str() const {
  std::ostringstream out;
  out << (ok ? "ok" : "FAIL") << " (" << compared << " coefficients, window " << window;
  if (mismatched) out << ", " << mismatched << " mismatched";
  out << ")";
  return out.str();
}

WindowedE e_one() {
  WindowedE out;
  out.el = lattice_one(weyl_pair_lattice());
  out.lo = 0;
  out.hi_valid = kExactWindow;
  return out;
}

WindowedE psi_inverse_plane(std::int64_t s, std::int64_t pre,
                            std::pair<std::int64_t, std::int64_t> vec, int mz,
                            std::int64_t qcut) {
  ZSeries zs = psi_inverse_series(s, pre, mz, qcut);
  WindowedE out;
  SkewLattice lat = weyl_pair_lattice();
  out.el = QTorusElement(lat);
  for (int m = 0; m <= zs.degree_bound(); ++m) {
    const QLaurent& c = zs.coef[static_cast<size_t>(m)];
    if (c.is_zero()) continue;
    out.el = out.el + QTorusElement::monomial(lat, c, {m * vec.first, m * vec.second});
  }
  out.lo = zs.lo;
  out.hi_valid = zs.hi_valid;
  out.dirs = {vec};
  out.mbound = mz;
  return out;
}

WindowedE e_mul(const WindowedE& a, const WindowedE& b) {
  WindowedE out;
  out.el = a.el * b.el;
  out.lo = a.lo + b.lo;
  // Terms above one factor's window can re-enter below the naive combined
  // window when commuting past the other factor costs a negative phase;
  // charge the worst case mbound^2 <w, w'> for every direction pair.
  std::int64_t mb = std::max(a.mbound, b.mbound);
  std::int64_t debt = 0;
  for (const auto& wa : a.dirs)
    for (const auto& wb : b.dirs) {
      std::int64_t p = wa.first * wb.second - wb.first * wa.second;
      if (p < 0) debt += mb * mb * p;
    }
  out.hi_valid = std::min(a.hi_valid + b.lo, b.hi_valid + a.lo) + debt;
  out.dirs = a.dirs;
  out.dirs.insert(out.dirs.end(), b.dirs.begin(), b.dirs.end());
  out.mbound = mb;
  return out;
}

SeriesMatch e_match(const WindowedE& a, const WindowedE& b, std::int64_t amax,
                    std::int64_t bmax) {
  SeriesMatch m;
  m.window = std::min(a.hi_valid, b.hi_valid);
  auto in_rect = [&](const std::vector<std::int64_t>& v) {
    return v[0] >= 0 && v[0] <= amax && v[1] >= 0 && v[1] <= bmax;
  };
  std::map<std::vector<std::int64_t>, int> slots;
  for (const auto& [v, c] : a.el.terms())
    if (in_rect(v)) slots[v] = 1;
  for (const auto& [v, c] : b.el.terms())
    if (in_rect(v)) slots[v] = 1;
  for (const auto& [v, unused] : slots) {
    QLaurent ca, cb;
    auto ita = a.el.terms().find(v);
    if (ita != a.el.terms().end()) ca = ita->second;
    auto itb = b.el.terms().find(v);
    if (itb != b.el.terms().end()) cb = itb->second;
    ++m.compared;
    if (ca.truncated_above(m.window) != cb.truncated_above(m.window)) ++m.mismatched;
  }
  m.ok = m.compared > 0 && m.mismatched == 0;
  return m;
}

std::string dump_exponent_lines(const QTorusElement& el) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : el.terms()) {
    for (const auto& [e, coeff] : c.terms()) {
      if (!first) out << "\n";
      out << "E(";
      for (size_t t = 0; t < v.size(); ++t) {
        if (t) out << ",";
        out << v[t];
      }
      out << ") q^(" << e << "/" << el.lattice().unit_den << ") : " << to_string(coeff);
      first = false;
    }
  }
  return out.str();
}

std::string SeriesIdentityReport::str() const {
  std::ostringstream out;
  out << name << ": scalar " << scalar.str() << ", plane " << plane.str() << " -> "
      << (ok ? "ok" : "FAIL");
  return out.str();
}

SeriesIdentityReport verify_pentagon_series(int mz, std::int64_t qcut) {
  SeriesIdentityReport rep;
  rep.name = "pentagon";
  rep.scalar = z_match(z_mul(psi_inverse_series(1, 2, mz, qcut), z_binomial(1, mz)),
                       psi_inverse_series(1, 0, mz, qcut));
  auto lhs = [&](std::int64_t qc) {
    return e_mul(psi_inverse_plane(1, 0, {0, 1}, mz, qc),
                 psi_inverse_plane(1, 0, {1, 0}, mz, qc));
  };
  // middle argument q Y X = E(1,1), the Weyl-normalized product
  auto rhs = [&](std::int64_t qc) {
    return e_mul(e_mul(psi_inverse_plane(1, 0, {1, 0}, mz, qc),
                       psi_inverse_plane(1, 0, {1, 1}, mz, qc)),
                 psi_inverse_plane(1, 0, {0, 1}, mz, qc));
  };
  rep.plane = match_to_cutoff(lhs, rhs, mz, mz, qcut);
  rep.ok = rep.scalar.ok && rep.plane.ok;
  return rep;
}

SeriesIdentityReport verify_hexagon_series(int mz, std::int64_t qcut) {
  SeriesIdentityReport rep;
  rep.name = "hexagon";
  rep.scalar = z_match(z_mul(psi_inverse_series(2, 1, mz, qcut), psi_inverse_series(2, -1, mz, qcut)),
                       psi_inverse_series(1, 0, mz, qcut));
  auto lhs = [&](std::int64_t qc) {
    return e_mul(psi_inverse_plane(1, 0, {0, 1}, mz, qc),
                 psi_inverse_plane(2, 0, {2, 0}, mz, qc));
  };
  auto rhs = [&](std::int64_t qc) {
    return e_mul(e_mul(psi_inverse_plane(2, 0, {2, 0}, mz, qc),
                       psi_inverse_plane(1, 0, {2, 1}, mz, qc)),
                 e_mul(psi_inverse_plane(2, 0, {2, 2}, mz, qc),
                       psi_inverse_plane(1, 0, {0, 1}, mz, qc)));
  };
  rep.plane = match_to_cutoff(lhs, rhs, 2 * mz, mz, qcut);
  rep.ok = rep.scalar.ok && rep.plane.ok;
  return rep;
}

SeriesIdentityReport verify_octagon_series(int mz, std::int64_t qcut) {
  SeriesIdentityReport rep;
  rep.name = "octagon";
  rep.scalar = z_match(
      z_mul(z_mul(psi_inverse_series(3, -2, mz, qcut), psi_inverse_series(3, 0, mz, qcut)),
            psi_inverse_series(3, 2, mz, qcut)),
      psi_inverse_series(1, 0, mz, qcut));
  auto lhs = [&](std::int64_t qc) {
    return e_mul(psi_inverse_plane(1, 0, {0, 1}, mz, qc),
                 psi_inverse_plane(3, 0, {3, 0}, mz, qc));
  };
  auto rhs = [&](std::int64_t qc) {
    return e_mul(e_mul(e_mul(psi_inverse_plane(3, 0, {3, 0}, mz, qc),
                             psi_inverse_plane(1, 0, {3, 1}, mz, qc)),
                       e_mul(psi_inverse_plane(3, 0, {6, 3}, mz, qc),
                             psi_inverse_plane(1, 0, {3, 2}, mz, qc))),
                 e_mul(psi_inverse_plane(3, 0, {3, 3}, mz, qc),
                       psi_inverse_plane(1, 0, {0, 1}, mz, qc)));
  };
  rep.plane = match_to_cutoff(lhs, rhs, 3 * mz, mz, qcut);
  rep.ok = rep.scalar.ok && rep.plane.ok;
  return rep;
}

ConjugationFormReport verify_conjugation_form(const Feed& f, int k, int order,
                                              std::int64_t qcut) {
  ConjugationFormReport rep;
  rep.feed = f;
  rep.k = k;
  rep.order = order;
  rep.qcut = qcut;

  SkewLattice lat = double_torus_lattice(f);
  const int n = f.n;
  const std::int64_t uk = f.q_unit_exponent(k);
  std::vector<std::int64_t> xk(static_cast<size_t>(2 * n), 0);
  xk[static_cast<size_t>(n + k)] = 1;
  std::vector<std::int64_t> xt = xk;
  for (int j = 0; j < n; ++j) xt[static_cast<size_t>(j)] += f.at(k, j);

  auto xdeg = [&](const std::vector<std::int64_t>& v) { return v[static_cast<size_t>(n + k)]; };
  auto truncate_deg = [&](const QTorusElement& el, std::int64_t base) {
    QTorusElement out(lat);
    for (const auto& [v, c] : el.terms())
      if (xdeg(v) - base <= order) out = out + QTorusElement::monomial(lat, c, v);
    return out;
  };

  // prod (1 + q_k^{2i-1} E(dir)), truncated to x-degree <= order
  auto inverse_psi_product = [&](const std::vector<std::int64_t>& dir) {
    QTorusElement acc = lattice_one(lat);
    for (std::int64_t i = 1; (2 * i - 1) * uk <= qcut; ++i) {
      QTorusElement factor =
          lattice_one(lat) + QTorusElement::monomial(lat, QLaurent::unit((2 * i - 1) * uk), dir);
      acc = truncate_deg(acc * factor, 0);
    }
    return acc;
  };
  // inverse of a series 1 + T with T of positive x-degree, to x-degree order
  auto invert_unipotent = [&](const QTorusElement& el) {
    QTorusElement one_el = lattice_one(lat);
    QTorusElement t = el - one_el;
    QTorusElement inv = one_el;
    QTorusElement power = one_el;
    for (int j = 1; j <= 2 * order; ++j) {
      power = truncate_deg(power * t, 0);
      if (power.is_zero()) break;
      inv = inv + (j % 2 ? -power : power);
    }
    return inv;
  };

  QTorusElement px = inverse_psi_product(xk);
  QTorusElement pt = inverse_psi_product(xt);
  QTorusElement conj = truncate_deg(invert_unipotent(px) * pt, 0);
  QTorusElement conj_inv = truncate_deg(invert_unipotent(pt) * px, 0);

  std::int64_t max_shift = 0;
  for (int g = 0; g < 2 * n; ++g) {
    std::vector<std::int64_t> eg(static_cast<size_t>(2 * n), 0);
    eg[static_cast<size_t>(g)] = 1;
    for (std::int64_t p : {lat.pairing_units(xk, eg), lat.pairing_units(xt, eg)}) {
      if (p < 0) p = -p;
      if (p > max_shift) max_shift = p;
    }
  }
  rep.window = qcut - 2 * max_shift * order - 1;

  rep.ok = true;
  for (int g = 0; g < 2 * n; ++g) {
    QTorusElement el = QTorusElement::basis(lat, g);
    std::int64_t base = g == n + k ? 1 : 0;
    QTorusElement lhs = truncate_deg(truncate_deg(conj * el, base) * conj_inv, base);

    TwistedRationalElement tw = quantum_mutation_twist(f, k, el);
    QTorusElement rhs(lat);
    for (const auto& [key, c] : tw.terms()) {
      QTorusElement mono = QTorusElement::monomial(lat, c, key.first);
      for (const auto& [bk, p] : key.second) {
        const std::vector<std::int64_t>& dir = bk.family == 0 ? xk : xt;
        if (p > 0) {
          QTorusElement factor =
              lattice_one(lat) + QTorusElement::monomial(lat, QLaurent::unit(bk.shift), dir);
          for (std::int64_t r = 0; r < p; ++r) mono = truncate_deg(mono * factor, base);
        } else {
          QTorusElement geo(lat);
          for (int j = 0; j <= 2 * order; ++j) {
            std::vector<std::int64_t> jd(dir.size());
            for (size_t t = 0; t < dir.size(); ++t) jd[t] = j * dir[t];
            geo = geo + QTorusElement::monomial(
                            lat, QLaurent::term(j % 2 ? -1 : 1, j * bk.shift), std::move(jd));
          }
          for (std::int64_t r = 0; r < -p; ++r) mono = truncate_deg(mono * geo, base);
        }
      }
      rhs = rhs + truncate_deg(mono, base);
    }

    bool good =
        truncate_exponents(lhs, rep.window) == truncate_exponents(rhs, rep.window);
    rep.generator_ok.push_back(good);
    rep.ok = rep.ok && good;
  }
  return rep;
}

std::string ConjugationFormReport::str() const {
  std::ostringstream out;
  out << "dilogarithm conjugation vs closed form, direction " << k << ", order " << order
      << ", window " << window << ":";
  for (size_t g = 0; g < generator_ok.size(); ++g) {
    const int n = feed.n;
    out << " ";
    if (static_cast<int>(g) < n) out << "B_" << g;
    else out << "X_" << (static_cast<int>(g) - n);
    out << (generator_ok[g] ? " ok" : " FAIL");
  }
  out << " -> " << (ok ? "ok" : "FAIL");
  return out.str();
}

}  // namespace cvq
