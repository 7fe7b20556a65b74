#include "cvq/affine.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "cvq/feed_io.hpp"
#include "cvq/linop.hpp"

namespace cvq {

AffineElement AffineElement::identity(int n) {
  AffineElement e;
  e.c = RatMatrix::identity(n);
  e.t.assign(static_cast<size_t>(n), Rational(0));
  return e;
}

AffineElement AffineElement::make(RatMatrix c, std::vector<Rational> t) {
  if (static_cast<int>(t.size()) != c.size())
    throw std::invalid_argument("AffineElement::make: size mismatch");
  Rational dt = c.det();
  if (dt != Rational(1) && dt != Rational(-1))
    throw std::invalid_argument("AffineElement::make: |det| != 1");
  AffineElement e;
  e.c = std::move(c);
  e.t = std::move(t);
  return e;
}

AffineElement AffineElement::from_matrix(RatMatrix c) {
  std::vector<Rational> t(static_cast<size_t>(c.size()), Rational(0));
  return make(std::move(c), std::move(t));
}

bool AffineElement::is_identity() const {
  if (!c.is_identity()) return false;
  for (const auto& v : t)
    if (v != Rational(0)) return false;
  return true;
}

std::vector<Rational> AffineElement::apply(const std::vector<Rational>& a) const {
  auto out = row_times(a, c);
  for (size_t m = 0; m < out.size(); ++m) out[m] += t[m];
  return out;
}

std::string AffineElement::str() const {
  std::ostringstream os;
  os << "c=" << c.str() << " t=[";
  for (size_t m = 0; m < t.size(); ++m) {
    if (m) os << ", ";
    os << to_string(t[m]);
  }
  os << "]";
  return os.str();
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: size mismatch");
  AffineElement e;
  e.c = a.c * b.c;
  e.t = row_times(a.t, b.c);
  for (int m = 0; m < b.size(); ++m) e.t[static_cast<size_t>(m)] += b.t[static_cast<size_t>(m)];
  return e;
}

AffineElement inverse(const AffineElement& a) {
  AffineElement e;
  e.c = a.c.inverse();
  auto tc = row_times(a.t, e.c);
  e.t.resize(tc.size());
  for (size_t m = 0; m < tc.size(); ++m) e.t[m] = -tc[m];
  return e;
}

AffineElement mutation_c_element(const Feed& f, int k) {
  return AffineElement::from_matrix(mutation_shift_matrix(f, k));
}

AffineElement gaussian_element(const Feed& f, int k) {
  return AffineElement::from_matrix(gaussian_shift_matrix(f, k));
}

AffineElement gaussian_combo_element(const Feed& f,
                                     const std::vector<std::int64_t>& coeff,
                                     int s) {
  if (static_cast<int>(coeff.size()) != f.n)
    throw std::invalid_argument("gaussian_combo_element: coeff size mismatch");
  if (s < 0 || s >= f.n)
    throw std::invalid_argument("gaussian_combo_element: direction out of range");
  // The two shears combine into c = I + D with column r of D equal to
  // -(coeff[r] d_s / d_r) w, where w_l = sum_m coeff[m] eps[m][l]. The
  // correction is a rank-one update whose trace term vanishes by the
  // skew-symmetrizability of eps, so det c = 1.
  std::vector<Rational> w(static_cast<size_t>(f.n), Rational(0));
  for (int l = 0; l < f.n; ++l)
    for (int m = 0; m < f.n; ++m)
      w[static_cast<size_t>(l)] += Rational(coeff[static_cast<size_t>(m)] * f.at(m, l));
  RatMatrix c = RatMatrix::identity(f.n);
  for (int r = 0; r < f.n; ++r) {
    if (coeff[static_cast<size_t>(r)] == 0) continue;
    Rational scale =
        Rational(coeff[static_cast<size_t>(r)]) * Rational(f.d[static_cast<size_t>(s)], f.d[static_cast<size_t>(r)]);
    for (int l = 0; l < f.n; ++l) c.at(l, r) -= scale * w[static_cast<size_t>(l)];
  }
  return AffineElement::from_matrix(std::move(c));
}

AffineElement permutation_element(const std::vector<int>& sigma) {
  AffineElement e;
  e.c = RatMatrix::permutation(sigma);
  e.t.assign(sigma.size(), Rational(0));
  return e;
}

std::string relation_name(PhaseRelation r) {
  switch (r) {
    case PhaseRelation::A1: return "A1";
    case PhaseRelation::A1xA1: return "A1xA1";
    case PhaseRelation::A2: return "A2";
    case PhaseRelation::B2: return "B2";
    case PhaseRelation::G2: return "G2";
  }
  return "?";
}

PhaseRelation relation_of(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return PhaseRelation::A1xA1;
    case Rank2Type::A2: return PhaseRelation::A2;
    case Rank2Type::B2: return PhaseRelation::B2;
    case Rank2Type::G2: return PhaseRelation::G2;
  }
  return PhaseRelation::A1xA1;
}

int relation_length(PhaseRelation r) {
  switch (r) {
    case PhaseRelation::A1: return 2;
    case PhaseRelation::A1xA1: return 4;
    case PhaseRelation::A2: return 5;
    case PhaseRelation::B2: return 6;
    case PhaseRelation::G2: return 8;
  }
  return 0;
}

std::string ResidualStep::str() const {
  std::ostringstream os;
  switch (kind) {
    case ResidualStepKind::MutationShift:
      os << "C(k=" << direction << ")";
      break;
    case ResidualStepKind::GaussianShift:
      os << "S(k=" << direction << ")";
      break;
    case ResidualStepKind::PermutationShift:
      os << "P(";
      for (size_t m = 0; m < sigma.size(); ++m) {
        if (m) os << " ";
        os << sigma[m];
      }
      os << ")";
      break;
  }
  if (inverted) os << "^-1";
  if (!note.empty()) os << "  " << note;
  return os.str();
}

namespace {

ResidualStep mut_step(const Feed& fd, int k, bool inv, std::string note) {
  ResidualStep s;
  s.kind = ResidualStepKind::MutationShift;
  s.inverted = inv;
  s.feed = fd;
  s.direction = k;
  s.note = std::move(note);
  auto e = mutation_c_element(fd, k);
  s.element = inv ? inverse(e) : e;
  return s;
}

ResidualStep gauss_step(const Feed& fd, int k, bool inv, std::string note) {
  ResidualStep s;
  s.kind = ResidualStepKind::GaussianShift;
  s.inverted = inv;
  s.feed = fd;
  s.direction = k;
  s.note = std::move(note);
  auto e = gaussian_element(fd, k);
  s.element = inv ? inverse(e) : e;
  return s;
}

ResidualStep gauss_combo_step(const Feed& fd, int i, int j, std::string note) {
  ResidualStep s;
  s.kind = ResidualStepKind::GaussianShift;
  s.feed = fd;
  s.direction = j;
  s.note = std::move(note);
  std::vector<std::int64_t> coeff(static_cast<size_t>(fd.n), 0);
  coeff[static_cast<size_t>(i)] = 1;
  coeff[static_cast<size_t>(j)] = 1;
  s.element = gaussian_combo_element(fd, coeff, j);
  return s;
}

ResidualStep perm_step(std::vector<int> sigma, std::string note) {
  ResidualStep s;
  s.kind = ResidualStepKind::PermutationShift;
  s.sigma = sigma;
  s.note = std::move(note);
  s.element = permutation_element(sigma);
  return s;
}

void require_direction(const Feed& f, int k) {
  if (k < 0 || k >= f.n)
    throw std::invalid_argument("build_residual_word: direction out of range");
}

void require_pattern(const Feed& f, int i, int j, PhaseRelation rel) {
  require_direction(f, i);
  require_direction(f, j);
  if (i == j)
    throw std::invalid_argument("build_residual_word: need two distinct directions");
  auto t = rank2_classify(f, i, j);
  if (!t || relation_of(*t) != rel) {
    std::ostringstream os;
    os << "build_residual_word: pair (" << i << ", " << j << ") with eps[i][j]="
       << f.at(i, j) << ", eps[j][i]=" << f.at(j, i) << " does not match the "
       << relation_name(rel) << " pattern";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

ResidualWord build_residual_word(PhaseRelation rel, const Feed& f, int i, int j) {
  ResidualWord w;
  w.relation = rel;
  w.base = f;
  w.i = i;
  w.j = j;

  if (rel == PhaseRelation::A1) {
    require_direction(f, i);
    Feed f1 = mutate_feed(f, i);
    w.steps.push_back(gauss_step(f, i, false, "Gaussian remainder"));
    w.steps.push_back(mut_step(f, i, false, "first mutation"));
    w.steps.push_back(mut_step(f1, i, false, "second mutation"));
    return w;
  }

  require_pattern(f, i, j, rel);

  if (rel == PhaseRelation::A1xA1) {
    Feed fi = mutate_feed(f, i);
    Feed fj = mutate_feed(f, j);
    w.steps.push_back(mut_step(fi, j, true, "path i,j step 2"));
    w.steps.push_back(mut_step(f, i, true, "path i,j step 1"));
    w.steps.push_back(mut_step(f, j, false, "path j,i step 1"));
    w.steps.push_back(mut_step(fj, i, false, "path j,i step 2"));
    return w;
  }

  // The sign of eps[i][j] decides which path of the relation picks up sign
  // flips when its dilogarithm arguments are pulled back to the base feed,
  // and with them the Gaussian remainder factors.
  bool pos = f.at(i, j) > 0;

  if (rel == PhaseRelation::A2) {
    Feed f1 = mutate_feed(f, i);
    Feed f2 = mutate_feed(f1, j);
    Feed f4 = mutate_feed(f, j);
    std::vector<int> sigma(static_cast<size_t>(f.n));
    for (int m = 0; m < f.n; ++m) sigma[static_cast<size_t>(m)] = m;
    std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
    w.steps.push_back(perm_step(sigma, "relabeling closing path j,i"));
    w.steps.push_back(mut_step(f4, i, true, "path j,i step 2"));
    w.steps.push_back(mut_step(f, j, true, "path j,i step 1"));
    if (pos) w.steps.push_back(gauss_step(f, i, false, "Gaussian remainder"));
    w.steps.push_back(mut_step(f, i, false, "path i,j,i step 1"));
    w.steps.push_back(mut_step(f1, j, false, "path i,j,i step 2"));
    w.steps.push_back(mut_step(f2, i, false, "path i,j,i step 3"));
    return w;
  }

  if (rel == PhaseRelation::B2) {
    Feed f1 = mutate_feed(f, i);
    Feed f2 = mutate_feed(f1, j);
    Feed f4 = mutate_feed(f, j);
    Feed f5 = mutate_feed(f4, i);
    w.steps.push_back(mut_step(f5, j, true, "path j,i,j step 3"));
    w.steps.push_back(mut_step(f4, i, true, "path j,i,j step 2"));
    w.steps.push_back(mut_step(f, j, true, "path j,i,j step 1"));
    if (pos)
      w.steps.push_back(gauss_step(f, i, false, "Gaussian remainder"));
    else
      w.steps.push_back(gauss_step(f, j, true, "Gaussian remainder"));
    w.steps.push_back(mut_step(f, i, false, "path i,j,i step 1"));
    w.steps.push_back(mut_step(f1, j, false, "path i,j,i step 2"));
    w.steps.push_back(mut_step(f2, i, false, "path i,j,i step 3"));
    return w;
  }

  // G2. The long path visits each direction twice with a sign flip, so the
  // remainder carries two Gaussian factors, not one: for eps[i][j] > 0 the
  // pair at x_i + x_j (scaled by the h-parameter of j) followed by the
  // standard pair at direction i, and for eps[i][j] < 0 the inverted
  // standard pairs at i and at j.
  Feed f1 = mutate_feed(f, i);
  Feed f2 = mutate_feed(f1, j);
  Feed f3 = mutate_feed(f2, i);
  Feed f5 = mutate_feed(f, j);
  Feed f6 = mutate_feed(f5, i);
  Feed f7 = mutate_feed(f6, j);
  w.steps.push_back(mut_step(f7, i, true, "path j,i,j,i step 4"));
  w.steps.push_back(mut_step(f6, j, true, "path j,i,j,i step 3"));
  w.steps.push_back(mut_step(f5, i, true, "path j,i,j,i step 2"));
  w.steps.push_back(mut_step(f, j, true, "path j,i,j,i step 1"));
  if (pos) {
    w.steps.push_back(gauss_combo_step(f, i, j, "Gaussian remainder at x_i + x_j"));
    w.steps.push_back(gauss_step(f, i, false, "Gaussian remainder"));
  } else {
    w.steps.push_back(gauss_step(f, i, true, "Gaussian remainder"));
    w.steps.push_back(gauss_step(f, j, true, "Gaussian remainder"));
  }
  w.steps.push_back(mut_step(f, i, false, "path i,j,i,j step 1"));
  w.steps.push_back(mut_step(f1, j, false, "path i,j,i,j step 2"));
  w.steps.push_back(mut_step(f2, i, false, "path i,j,i,j step 3"));
  w.steps.push_back(mut_step(f3, j, false, "path i,j,i,j step 4"));
  return w;
}

AffineElement ResidualWord::composed() const {
  AffineElement acc = AffineElement::identity(base.n);
  for (const auto& s : steps) acc = compose(acc, s.element);
  return acc;
}

namespace {

std::string feed_brief(const Feed& f) {
  std::ostringstream os;
  os << "n=" << f.n << " d=[";
  for (int m = 0; m < f.n; ++m) {
    if (m) os << ",";
    os << f.d[static_cast<size_t>(m)];
  }
  os << "] eps=[";
  for (int r = 0; r < f.n; ++r) {
    if (r) os << ",";
    os << "[";
    for (int c = 0; c < f.n; ++c) {
      if (c) os << ",";
      os << f.at(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string ResidualWord::str() const {
  std::ostringstream os;
  os << "relation " << relation_name(relation) << " at (" << i << ", " << j
     << ") on " << feed_brief(base) << "\n";
  for (size_t m = 0; m < steps.size(); ++m)
    os << "  " << m + 1 << ". " << steps[m].str() << "\n";
  return os.str();
}

std::string PhaseReport::str() const {
  std::ostringstream os;
  os << word.str();
  os << "composed: " << composed.str() << "\n";
  if (identity)
    os << "verdict: identity, phase constant 1 (exact)\n";
  else
    os << "verdict: NOT the identity\n";
  return os.str();
}

PhaseReport verify_phase(PhaseRelation rel, const Feed& f, int i, int j) {
  PhaseReport r;
  r.word = build_residual_word(rel, f, i, j);
  r.composed = r.word.composed();
  r.identity = r.composed.is_identity();
  return r;
}

std::vector<PhaseCase> builtin_phase_cases() {
  std::vector<PhaseCase> cases;
  auto feed_of = [](const std::string& name) { return load_seed(name).feed; };
  auto add = [&cases](std::string label, PhaseRelation rel, Feed f, int i, int j) {
    cases.push_back({std::move(label), rel, std::move(f), i, j});
  };

  add("A1 on the minimal A2 feed, k=0", PhaseRelation::A1, feed_of("a2"), 0, 0);
  add("A1 on the minimal B2 feed, k=1", PhaseRelation::A1, feed_of("b2"), 1, 1);
  add("A1 on the Markov feed, k=2", PhaseRelation::A1, feed_of("markov"), 2, 2);
  add("A1 on the coupled G2 feed, k=2", PhaseRelation::A1, feed_of("g2x3"), 2, 2);

  add("A1xA1 minimal", PhaseRelation::A1xA1, feed_of("a1xa1"), 0, 1);
  add("A1xA1 with a shared neighbor",
      PhaseRelation::A1xA1, make_feed(3, {0, 0, 1, 0, 0, 1, -1, -1, 0}, {1, 1, 1}), 0, 1);
  add("A1xA1 inside the coupled A2 feed at (0, 3)",
      PhaseRelation::A1xA1, feed_of("a2x5"), 0, 3);
  add("A1xA1 with unequal weights",
      PhaseRelation::A1xA1,
      embed_rank2(4, 0, 2, Rank2Type::A1xA1, {2, 1, 1, 1}, {{1, 0, 2}, {3, 2, 1}}), 0, 2);

  add("A2 minimal", PhaseRelation::A2, feed_of("a2"), 0, 1);
  add("A2 minimal, opposite orientation",
      PhaseRelation::A2, make_feed(2, {0, -1, 1, 0}, {1, 1}), 0, 1);
  add("A2 with one coupling", PhaseRelation::A2, feed_of("a2x3"), 0, 1);
  add("A2 with three couplings", PhaseRelation::A2, feed_of("a2x5"), 1, 2);
  add("A2 with a scaled symmetrizer",
      PhaseRelation::A2, make_feed(2, {0, 1, -1, 0}, {2, 2}), 0, 1);

  add("B2 minimal", PhaseRelation::B2, feed_of("b2"), 0, 1);
  add("B2 minimal, opposite orientation",
      PhaseRelation::B2, make_feed(2, {0, -2, 1, 0}, {1, 2}), 0, 1);
  add("B2 with one coupling", PhaseRelation::B2, feed_of("b2x3"), 0, 1);
  add("B2 with three couplings", PhaseRelation::B2, feed_of("b2x5"), 1, 2);
  add("B2 with the weighted vertex first",
      PhaseRelation::B2, make_feed(2, {0, -1, 2, 0}, {2, 1}), 1, 0);

  add("G2 minimal", PhaseRelation::G2, feed_of("g2"), 0, 1);
  add("G2 minimal, opposite orientation",
      PhaseRelation::G2, make_feed(2, {0, -3, 1, 0}, {1, 3}), 0, 1);
  add("G2 with one coupling", PhaseRelation::G2, feed_of("g2x3"), 0, 1);
  add("G2 with three couplings", PhaseRelation::G2, feed_of("g2x5"), 1, 2);
  add("G2 with a scaled symmetrizer",
      PhaseRelation::G2, make_feed(2, {0, 3, -1, 0}, {2, 6}), 0, 1);

  return cases;
}

}  // namespace cvq
