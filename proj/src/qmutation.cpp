#include "cvq/qmutation.hpp"

#include <sstream>
#include <stdexcept>

namespace cvq {
namespace {

std::int64_t pos_part(std::int64_t v) { return v > 0 ? v : 0; }

std::vector<std::int64_t> x_direction(const Feed& f, int i) {
  std::vector<std::int64_t> v(static_cast<size_t>(2 * f.n), 0);
  v[static_cast<size_t>(f.n + i)] = 1;
  return v;
}

std::vector<std::int64_t> tilde_x_direction(const Feed& f, int i) {
  std::vector<std::int64_t> v = x_direction(f, i);
  for (int j = 0; j < f.n; ++j) v[static_cast<size_t>(j)] += f.at(i, j);
  return v;
}

}  // namespace

QTorusElement apply_monomial_images(const MonomialImages& m, const QTorusElement& el) {
  QTorusElement out(m.tgt);
  for (const auto& [v, c] : el.terms()) {
    std::int64_t phase = 0;
    std::vector<std::int64_t> img(static_cast<size_t>(m.tgt.rank), 0);
    for (int a = 0; a < m.src.rank; ++a) {
      std::int64_t va = v[static_cast<size_t>(a)];
      if (va == 0) continue;
      phase += va * m.pre[static_cast<size_t>(a)];
      const auto& wa = m.w[static_cast<size_t>(a)];
      for (size_t t = 0; t < img.size(); ++t) img[t] += va * wa[t];
      for (int b = a + 1; b < m.src.rank; ++b) {
        std::int64_t vb = v[static_cast<size_t>(b)];
        if (vb == 0) continue;
        phase += va * vb *
                 (m.tgt.pairing_units(wa, m.w[static_cast<size_t>(b)]) - m.src.pairing_units(a, b));
      }
    }
    out = out + QTorusElement::monomial(m.tgt, c.shifted(phase), std::move(img));
  }
  return out;
}

bool images_preserve_pairings(const MonomialImages& m) {
  for (int a = 0; a < m.src.rank; ++a)
    for (int b = a + 1; b < m.src.rank; ++b)
      if (m.tgt.pairing_units(m.w[static_cast<size_t>(a)], m.w[static_cast<size_t>(b)]) !=
          m.src.pairing_units(a, b))
        return false;
  return true;
}

MonomialImages mutation_monomial_images(const Feed& base, int k) {
  Feed primed = mutate_feed(base, k);
  const int n = base.n;
  MonomialImages m;
  m.src = double_torus_lattice(primed);
  m.tgt = double_torus_lattice(base);
  m.pre.assign(static_cast<size_t>(2 * n), 0);
  m.w.assign(static_cast<size_t>(2 * n), {});
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> wb(static_cast<size_t>(2 * n), 0);
    if (i != k) {
      wb[static_cast<size_t>(i)] = 1;
    } else {
      wb[static_cast<size_t>(k)] = -1;
      for (int j = 0; j < n; ++j) wb[static_cast<size_t>(j)] += pos_part(-base.at(k, j));
    }
    m.w[static_cast<size_t>(i)] = std::move(wb);

    std::vector<std::int64_t> wx(static_cast<size_t>(2 * n), 0);
    if (i != k) {
      wx[static_cast<size_t>(n + i)] = 1;
      wx[static_cast<size_t>(n + k)] = pos_part(base.at(i, k));
    } else {
      wx[static_cast<size_t>(n + k)] = -1;
    }
    m.w[static_cast<size_t>(n + i)] = std::move(wx);
  }
  return m;
}

QTorusElement quantum_mutation_monomial(const Feed& base, int k, const QTorusElement& el) {
  MonomialImages m = mutation_monomial_images(base, k);
  if (el.lattice() != m.src)
    throw std::invalid_argument("quantum_mutation_monomial: element not over the primed torus");
  return apply_monomial_images(m, el);
}

TwistedRationalElement::TwistedRationalElement(Feed f, int k)
    : f_(std::move(f)), k_(k), lat_(double_torus_lattice(f_)) {}

TwistedRationalElement TwistedRationalElement::from_torus(const Feed& f, int k,
                                                          const QTorusElement& el) {
  TwistedRationalElement out(f, k);
  if (el.lattice() != out.lat_)
    throw std::invalid_argument("from_torus: element not over this feed's torus");
  for (const auto& [v, c] : el.terms()) out.add_term(v, {}, c);
  return out;
}

std::vector<std::int64_t> TwistedRationalElement::family_vector(int family) const {
  return family == 0 ? x_direction(f_, k_) : tilde_x_direction(f_, k_);
}

void TwistedRationalElement::add_term(std::vector<std::int64_t> evec, BinPowers bins,
                                      const QLaurent& c) {
  if (c.is_zero()) return;
  for (auto it = bins.begin(); it != bins.end();) {
    if (it->second == 0) it = bins.erase(it);
    else ++it;
  }
  TermKey key{std::move(evec), std::move(bins)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TwistedRationalElement TwistedRationalElement::operator+(const TwistedRationalElement& o) const {
  if (terms_.empty()) return o;
  if (o.terms_.empty()) return *this;
  if (f_ != o.f_ || k_ != o.k_)
    throw std::invalid_argument("twisted sum: mismatched localization frames");
  TwistedRationalElement out = *this;
  for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
  return out;
}

TwistedRationalElement TwistedRationalElement::scaled(const QLaurent& c) const {
  TwistedRationalElement out(f_, k_);
  for (const auto& [key, cv] : terms_) out.add_term(key.first, key.second, cv * c);
  return out;
}

TwistedRationalElement TwistedRationalElement::operator-(const TwistedRationalElement& o) const {
  return *this + o.scaled(QLaurent(-1));
}

TwistedRationalElement TwistedRationalElement::operator*(const TwistedRationalElement& o) const {
  if (f_ != o.f_ || k_ != o.k_)
    throw std::invalid_argument("twisted product: mismatched localization frames");
  const std::vector<std::int64_t> fam[2] = {family_vector(0), family_vector(1)};
  TwistedRationalElement out(f_, k_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      const auto& [va, binsa] = ka;
      const auto& [vb, binsb] = kb;
      QLaurent c = (ca * cb).shifted(lat_.pairing_units(va, vb));
      std::vector<std::int64_t> v(va.size());
      for (size_t t = 0; t < v.size(); ++t) v[t] = va[t] + vb[t];
      // binomials of the left factor slide right past E(vb), shifting their
      // argument by the commutation with vb
      BinPowers bins = binsb;
      for (const auto& [bk, p] : binsa) {
        std::int64_t adj = 2 * lat_.pairing_units(fam[bk.family], vb);
        bins[BinKey{bk.family, bk.shift + adj}] += p;
      }
      out.add_term(std::move(v), std::move(bins), c);
    }
  }
  return out;
}

QTorusElement TwistedRationalElement::cleared_numerator(BinPowers* denom) const {
  BinPowers need;
  for (const auto& [key, c] : terms_)
    for (const auto& [bk, p] : key.second)
      if (p < 0 && -p > need[bk]) need[bk] = -p;
  QTorusElement sum(lat_);
  for (const auto& [key, c] : terms_) {
    QTorusElement mono = QTorusElement::monomial(lat_, c, key.first);
    BinPowers bins = key.second;
    for (const auto& [bk, extra] : need) bins[bk] += extra;
    for (const auto& [bk, p] : bins) {
      if (p < 0) throw std::logic_error("cleared_numerator: clearing failed");
      if (p == 0) continue;
      QTorusElement factor =
          QTorusElement::monomial(lat_, QLaurent(1),
                                  std::vector<std::int64_t>(static_cast<size_t>(lat_.rank), 0)) +
          QTorusElement::monomial(lat_, QLaurent::unit(bk.shift), family_vector(bk.family));
      for (std::int64_t r = 0; r < p; ++r) mono = mono * factor;
    }
    sum = sum + mono;
  }
  if (denom) *denom = std::move(need);
  return sum;
}

QTorusElement TwistedRationalElement::expanded() const {
  for (const auto& [key, c] : terms_)
    for (const auto& [bk, p] : key.second)
      if (p < 0) throw std::logic_error("expanded: element has denominator factors");
  return cleared_numerator();
}

bool TwistedRationalElement::is_zero() const { return cleared_numerator().is_zero(); }

bool TwistedRationalElement::equivalent(const TwistedRationalElement& o) const {
  return (*this - o).is_zero();
}

std::string TwistedRationalElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << "\n";
    out << "E(";
    for (size_t t = 0; t < key.first.size(); ++t) {
      if (t) out << ",";
      out << key.first[t];
    }
    out << ")";
    for (const auto& [bk, p] : key.second) {
      out << " (1+u^" << bk.shift << "*" << (bk.family == 0 ? "Xk" : "Xtk") << ")";
      if (p != 1) out << "^" << p;
    }
    out << " : " << c.str();
    first = false;
  }
  return out.str();
}

namespace {

/// Binomial ladder of the dilogarithm-ratio conjugation: sign * L(m) where
/// L(m) = prod_{r=1}^{m} (1 + u^{(2r-1) unit} Z) for m >= 0 and the inverse
/// factors at negative shifts for m < 0.
void add_ladder(BinPowers& bins, int family, std::int64_t m, std::int64_t unit, int sign) {
  if (m >= 0) {
    for (std::int64_t r = 1; r <= m; ++r) bins[BinKey{family, (2 * r - 1) * unit}] += sign;
  } else {
    for (std::int64_t r = 1; r <= -m; ++r) bins[BinKey{family, -(2 * r - 1) * unit}] -= sign;
  }
}

}  // namespace

TwistedRationalElement quantum_mutation_twist(const Feed& f, int k, const QTorusElement& el) {
  return quantum_mutation_twist(f, k, TwistedRationalElement::from_torus(f, k, el));
}

TwistedRationalElement quantum_mutation_twist(const Feed& f, int k,
                                              const TwistedRationalElement& el) {
  if (!el.terms().empty() && (el.feed() != f || el.direction() != k))
    throw std::invalid_argument("quantum_mutation_twist: mismatched localization frame");
  TwistedRationalElement out(f, k);
  const SkewLattice& lat = out.lattice();
  const std::vector<std::int64_t> xk = out.family_vector(0);
  const std::vector<std::int64_t> xtk = out.family_vector(1);
  const std::int64_t N = f.lcm_d();
  const std::int64_t dk = f.d[static_cast<size_t>(k)];
  const std::int64_t uk = f.q_unit_exponent(k);
  for (const auto& [key, c] : el.terms()) {
    const auto& v = key.first;
    std::int64_t px = lat.pairing_units(xk, v) * dk;
    std::int64_t pt = lat.pairing_units(xtk, v) * dk;
    if (px % N != 0 || pt % N != 0)
      throw std::logic_error("quantum_mutation_twist: non-integral ladder length");
    BinPowers bins = key.second;
    add_ladder(bins, 0, px / N, uk, +1);
    add_ladder(bins, 1, pt / N, uk, -1);
    out.add_term(v, std::move(bins), c);
  }
  return out;
}

TwistedRationalElement quantum_mutation_pull(const Feed& base, int k,
                                             const TwistedRationalElement& el) {
  Feed primed = mutate_feed(base, k);
  if (!el.terms().empty() && (el.feed() != primed || el.direction() != k))
    throw std::invalid_argument("quantum_mutation_pull: element not over the primed seed");
  MonomialImages m = mutation_monomial_images(base, k);
  TwistedRationalElement out(base, k);
  const SkewLattice& tgt = out.lattice();

  // images of the two binomial directions: u^{fam_pre} E(fam_img), with
  // fam_img = +/- the standard direction in the base lattice
  std::int64_t fam_pre[2] = {0, 0};
  std::vector<std::int64_t> fam_img[2];
  int fam_sign[2] = {0, 0};
  for (int family = 0; family < 2; ++family) {
    TwistedRationalElement probe(primed, k);
    QTorusElement img = apply_monomial_images(
        m, QTorusElement::monomial(m.src, QLaurent(1), probe.family_vector(family)));
    QLaurent pc;
    std::vector<std::int64_t> w;
    if (!img.single_term(&pc, &w) || pc.min_exponent() != pc.max_exponent() ||
        pc.terms().begin()->second != 1)
      throw std::logic_error("quantum_mutation_pull: binomial direction image not a unit monomial");
    fam_pre[family] = pc.min_exponent();
    std::vector<std::int64_t> std_dir = out.family_vector(family);
    std::vector<std::int64_t> neg_dir = std_dir;
    for (auto& t : neg_dir) t = -t;
    if (w == std_dir) fam_sign[family] = +1;
    else if (w == neg_dir) fam_sign[family] = -1;
    else throw std::logic_error("quantum_mutation_pull: binomial direction image off-axis");
    fam_img[family] = std::move(w);
  }

  for (const auto& [key, c] : el.terms()) {
    QTorusElement mono =
        apply_monomial_images(m, QTorusElement::monomial(m.src, c, key.first));
    QLaurent cc;
    std::vector<std::int64_t> vv;
    if (!mono.single_term(&cc, &vv))
      throw std::logic_error("quantum_mutation_pull: monomial image not a monomial");
    BinPowers bins;
    for (const auto& [bk, p] : key.second) {
      std::int64_t a = bk.shift + fam_pre[bk.family];
      if (fam_sign[bk.family] > 0) {
        bins[BinKey{bk.family, a}] += p;
      } else {
        // (1 + u^a E(-z))^p = u^{ap} E(-pz) (1 + u^{-a} E(z))^p; the extracted
        // monomial commutes with every binomial factor and joins E(vv)
        std::vector<std::int64_t> shift_vec = fam_img[bk.family];
        for (auto& t : shift_vec) t *= p;
        cc = cc.shifted(a * p + tgt.pairing_units(vv, shift_vec));
        for (size_t t = 0; t < vv.size(); ++t) vv[t] += shift_vec[t];
        bins[BinKey{bk.family, -a}] += p;
      }
    }
    out.add_term(std::move(vv), std::move(bins), cc);
  }
  return out;
}

TwistedRationalElement quantum_mutation(const Feed& base, int k, const QTorusElement& el) {
  return quantum_mutation_twist(base, k, quantum_mutation_monomial(base, k, el));
}

QuantumInvolutionReport verify_quantum_involution(const Feed& f, int k) {
  QuantumInvolutionReport rep;
  rep.feed = f;
  rep.k = k;
  Feed primed = mutate_feed(f, k);
  SkewLattice lat = double_torus_lattice(f);
  rep.ok = true;
  for (int g = 0; g < 2 * f.n; ++g) {
    QTorusElement el = QTorusElement::basis(lat, g);
    TwistedRationalElement across = quantum_mutation_twist(
        primed, k, quantum_mutation_monomial(primed, k, el));
    TwistedRationalElement back =
        quantum_mutation_twist(f, k, quantum_mutation_pull(f, k, across));
    bool good = back.equivalent(TwistedRationalElement::from_torus(f, k, el));
    rep.generator_ok.push_back(good);
    rep.ok = rep.ok && good;
  }
  return rep;
}

std::string QuantumInvolutionReport::str() const {
  std::ostringstream out;
  out << "quantum mutation round trip, direction " << k << ": ";
  for (size_t g = 0; g < generator_ok.size(); ++g) {
    if (g) out << " ";
    const int n = feed.n;
    if (static_cast<int>(g) < n) out << "B_" << g;
    else out << "X_" << (static_cast<int>(g) - n);
    out << (generator_ok[g] ? " ok" : " FAIL");
  }
  out << " -> " << (ok ? "identity" : "FAIL");
  return out.str();
}

}  // namespace cvq
