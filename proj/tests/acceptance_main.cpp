// Acceptance gate for the toolkit: one line per criterion, nonzero exit when
// any fails. Budgets and tolerances are pinned here; everything except the
// numerical dilogarithm suite is exact rational/integer arithmetic.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

#include "cvq/affine.hpp"
#include "cvq/classical.hpp"
#include "cvq/feed_io.hpp"
#include "cvq/linop.hpp"
#include "cvq/qdilog.hpp"
#include "cvq/qmutation.hpp"
#include "cvq/qseries.hpp"
#include "cvq/qtorus.hpp"

using namespace cvq;

namespace {

Feed random_feed(std::mt19937_64& rng, int n, int max_entry = 2, int max_d = 3) {
  std::uniform_int_distribution<int> dd(1, max_d), ds(-max_entry, max_entry);
  std::vector<std::int64_t> d(static_cast<size_t>(n));
  for (auto& v : d) v = dd(rng);
  std::vector<std::int64_t> eps(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t s = ds(rng);
      std::int64_t g = std::gcd(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
      eps[static_cast<size_t>(i) * n + j] = s * d[static_cast<size_t>(j)] / g;
      eps[static_cast<size_t>(j) * n + i] = -s * d[static_cast<size_t>(i)] / g;
    }
  return make_feed(n, std::move(eps), std::move(d));
}

AffineElement random_affine(std::mt19937_64& rng, int n, int steps = 5) {
  std::uniform_int_distribution<int> pick(0, n - 1), what(0, 2), off(-2, 2);
  RatMatrix m = RatMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    RatMatrix e = RatMatrix::identity(n);
    int a = pick(rng), b = pick(rng);
    int w = what(rng);
    if (w == 0 && a != b) {
      e.at(a, b) = Rational(off(rng));
    } else if (w == 1 && a != b) {
      e.at(a, a) = e.at(b, b) = Rational(0);
      e.at(a, b) = e.at(b, a) = Rational(1);
    } else {
      e.at(a, a) = Rational(-1);
    }
    m = m * e;
  }
  std::vector<Rational> t(static_cast<size_t>(n));
  for (auto& v : t) v = Rational(off(rng), 1 + pick(rng));
  return AffineElement::make(std::move(m), std::move(t));
}

LinOp random_linop(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), deg(-1, 1);
  LinOp op = LinOp::zero(n);
  for (int i = 0; i < n; ++i) {
    op.alpha[static_cast<size_t>(i)] = HbarScalar::term(Rational(num(rng), den(rng)), deg(rng));
    op.beta[static_cast<size_t>(i)] = HbarScalar::term(Rational(num(rng), den(rng)), deg(rng));
  }
  return op;
}

QTorusElement random_torus(std::mt19937_64& rng, const SkewLattice& lat, int terms = 3) {
  std::uniform_int_distribution<std::int64_t> dv(-2, 2), dc(-3, 3), de(-4, 4);
  QTorusElement out(lat);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int64_t> v(static_cast<size_t>(lat.rank));
    for (auto& x : v) x = dv(rng);
    out = out + QTorusElement::monomial(lat, QLaurent::term(dc(rng), de(rng)), v);
  }
  return out;
}

// 1. All five phase constants equal 1 on the builtin suite (>= 3 feeds per
//    relation), composed exactly in the affine shift group.
bool phase_constants(std::string& detail) {
  std::map<PhaseRelation, int> per_relation;
  int identity = 0, total = 0;
  for (const auto& pc : builtin_phase_cases()) {
    ++total;
    ++per_relation[pc.relation];
    if (verify_phase(pc.relation, pc.feed, pc.i, pc.j).identity) ++identity;
  }
  bool covered = per_relation.size() == 5;
  for (const auto& [rel, count] : per_relation) covered = covered && count >= 3;
  detail = std::to_string(identity) + "/" + std::to_string(total) + " residual words identity";
  return covered && identity == total;
}

// 2. Representation dichotomy: the Old flavor intertwines the mutation shift
//    exactly; the New flavor fails precisely when direction k couples, with a
//    nonzero witness.
bool rep_dichotomy(std::string& detail) {
  std::mt19937_64 rng(20260823);
  int feeds = 0, directions = 0;
  for (int t = 0; t < 10; ++t) {
    Feed f = random_feed(rng, 2 + t % 3);
    ++feeds;
    for (int k = 0; k < f.n; ++k) {
      ++directions;
      if (!verify_shift_conjugation_b(f, k, RepFlavor::Old)) return false;
      if (!verify_shift_conjugation_b(f, k, RepFlavor::New)) return false;
      ShiftConjugationXReport x = verify_shift_conjugation_x(f, k);
      if (!x.old_ok) return false;
      bool row_zero = true, witness = false;
      for (int j = 0; j < f.n; ++j) row_zero = row_zero && f.at(k, j) == 0;
      for (const auto& r : x.new_residual_x) witness = witness || !r.is_zero();
      if (x.new_ok != row_zero) return false;
      if (!x.new_ok && !witness) return false;
    }
  }
  detail = std::to_string(feeds) + " feeds, " + std::to_string(directions) +
           " directions, witnesses present";
  return true;
}

// 3. Quantum rank-1 relation: the squared quantum mutation fixes every
//    generator of the doubled torus exactly.
bool quantum_rank1(std::string& detail) {
  std::mt19937_64 rng(31415);
  int checked = 0;
  for (int t = 0; t < 10; ++t) {
    Feed f = random_feed(rng, 2 + t % 3);
    for (int k = 0; k < f.n; ++k) {
      if (!verify_quantum_involution(f, k).ok) return false;
      ++checked;
    }
  }
  detail = std::to_string(checked) + " squared mutations cancel exactly";
  return true;
}

// 4. Series identities at the pinned truncations.
bool series_identities(std::string& detail) {
  SeriesIdentityReport pent = verify_pentagon_series(6, 60);
  SeriesIdentityReport hexa = verify_hexagon_series(4, 60);
  SeriesIdentityReport octa = verify_octagon_series(3, 60);
  detail = "windows " + std::to_string(pent.plane.window) + "/" +
           std::to_string(hexa.plane.window) + "/" + std::to_string(octa.plane.window) +
           ", coefficients " + std::to_string(pent.plane.compared) + "/" +
           std::to_string(hexa.plane.compared) + "/" + std::to_string(octa.plane.compared);
  bool windows = pent.plane.window >= 60 && hexa.plane.window >= 60 && octa.plane.window >= 60;
  return pent.ok && hexa.ok && octa.ok && windows;
}

// 5. Classical trivial transformations on all three seed kinds at 20 exact
//    rational points each.
bool classical_trivial(std::string& detail) {
  int words = 0;
  for (const char* name : {"a1xa1", "a2", "b2", "g2"}) {
    Feed f = load_seed(name).feed;
    for (SeedKind kind : {SeedKind::A, SeedKind::X, SeedKind::D}) {
      if (!verify_h_plus_2_gon(f, 0, 1, kind, 20, 97)) return false;
      ++words;
      for (int k = 0; k < f.n; ++k) {
        Word square{step_mutate(k), step_mutate(k)};
        if (!word_trivial_at_samples(f, square, kind, 20, 98)) return false;
        ++words;
      }
    }
  }
  detail = std::to_string(words) + " words exact at 20 points each";
  return true;
}

// 6. Langlands duality is an exact involution on exchange data and commutes
//    with mutation.
bool langlands(std::string& detail) {
  std::mt19937_64 rng(60221023);
  int feeds = 0;
  for (int t = 0; t < 20; ++t) {
    Feed f = random_feed(rng, 2 + t % 3);
    DualFeed dual = langlands_dual(f);
    for (int i = 0; i < f.n; ++i) {
      if (dual.d[static_cast<size_t>(i)] != Rational(1, f.d[static_cast<size_t>(i)]))
        return false;
      for (int j = 0; j < f.n; ++j)
        if (dual.at(i, j) != -f.at(j, i)) return false;
    }
    for (int k = 0; k < f.n; ++k)
      if (mutate_matrix(f.n, dual.eps, k) != langlands_dual(mutate_feed(f, k)).eps)
        return false;
    ++feeds;
  }
  detail = std::to_string(feeds) + " feeds, dual and mutation commute";
  return true;
}

// 7. Numerical dilogarithm suite at hbar = sqrt(2) - 1; residuals below 1e-8,
//    the compact/non-compact ratio at complex h below 1e-6.
bool dilog_suite(std::string& detail) {
  std::vector<DilogCheck> checks = run_dilog_suite(DilogConfig{});
  double worst = 0, worst_ratio = 0;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    if (c.name == "compact ratio")
      worst_ratio = std::max(worst_ratio, c.max_residual);
    else
      worst = std::max(worst, c.max_residual);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.2e (< 1e-8), ratio %.2e (< 1e-6)", worst,
                worst_ratio);
  detail = buf;
  return all && worst < 1e-8 && worst_ratio < 1e-6;
}

// 8. Property suites: affine group axioms, bracket preservation under shift
//    conjugation, star/associativity in the quantum torus.
bool property_suites(std::string& detail) {
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> dim(2, 5);
  AffineElement prev = random_affine(rng, 3), prev2 = random_affine(rng, 3);
  for (int t = 0; t < 1000; ++t) {
    int n = 3;
    AffineElement a = random_affine(rng, n);
    if (!compose(a, inverse(a)).is_identity()) return false;
    if (compose(AffineElement::identity(n), a) != a) return false;
    if (compose(compose(prev2, prev), a) != compose(prev2, compose(prev, a))) return false;
    std::vector<Rational> v(static_cast<size_t>(n), Rational(t % 7, 3));
    if (compose(prev, a).apply(v) != a.apply(prev.apply(v))) return false;
    prev2 = prev;
    prev = a;
  }
  for (int t = 0; t < 1000; ++t) {
    int n = dim(rng);
    RatMatrix c = random_affine(rng, n).c;
    LinOp a = random_linop(rng, n), b = random_linop(rng, n);
    if (bracket(conjugate_by_matrix(c, a), conjugate_by_matrix(c, b)) != bracket(a, b))
      return false;
  }
  std::mt19937_64 rng2(1729);
  SkewLattice lat = double_torus_lattice(load_seed("g2").feed);
  for (int t = 0; t < 200; ++t) {
    QTorusElement a = random_torus(rng2, lat), b = random_torus(rng2, lat),
                  c = random_torus(rng2, lat);
    if ((a * b) * c != a * (b * c)) return false;
    if (a.star().star() != a) return false;
    if ((a * b).star() != b.star() * a.star()) return false;
  }
  detail = "1000 affine, 1000 bracket, 200 torus draws";
  return true;
}

struct Criterion {
  int num;
  const char* title;
  double budget_s;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "phase constants of the five trivial relations", 1.0, phase_constants},
      {2, "shift-conjugation dichotomy of the two flavors", 1.0, rep_dichotomy},
      {3, "quantum mutation squares to the identity", 10.0, quantum_rank1},
      {4, "pentagon / hexagon / octagon series identities", 60.0, series_identities},
      {5, "classical trivial words on A, X and D seeds", 5.0, classical_trivial},
      {6, "Langlands duality commutes with mutation", 1.0, langlands},
      {7, "non-compact dilogarithm functional equations", 30.0, dilog_suite},
      {8, "group, bracket and torus property suites", 10.0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = c.run(detail);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] %d %-48s %6.2f s / %.0f s  %s%s\n", ok && in_budget ? "PASS" : "FAIL",
                c.num, c.title, secs, c.budget_s, detail.c_str(),
                in_budget ? "" : "  (over budget)");
  }
  std::printf("%d/8 criteria satisfied\n", 8 - failures);
  return failures;
}
