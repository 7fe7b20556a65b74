#include "cvq/qtorus.hpp"

#include <sstream>
#include <stdexcept>

namespace cvq {
namespace {

void add_into(std::map<std::int64_t, Int>& dst, std::int64_t e, const Int& c) {
  auto it = dst.find(e);
  if (it == dst.end()) {
    if (c != 0) dst[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) dst.erase(it);
}

}  // namespace

QLaurent QLaurent::term(Int c, std::int64_t e) {
  QLaurent out;
  if (c != 0) out.c_[e] = std::move(c);
  return out;
}

bool QLaurent::is_one() const {
  if (c_.size() != 1) return false;
  const auto& [e, c] = *c_.begin();
  return e == 0 && c == 1;
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
  QLaurent out = *this;
  for (const auto& [e, c] : o.c_) add_into(out.c_, e, c);
  return out;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
  QLaurent out = *this;
  for (const auto& [e, c] : o.c_) add_into(out.c_, e, -c);
  return out;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
  QLaurent out;
  for (const auto& [ea, ca] : c_)
    for (const auto& [eb, cb] : o.c_) add_into(out.c_, ea + eb, ca * cb);
  return out;
}

QLaurent QLaurent::operator-() const {
  QLaurent out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

QLaurent QLaurent::shifted(std::int64_t e) const {
  QLaurent out;
  for (const auto& [ea, c] : c_) out.c_[ea + e] = c;
  return out;
}

QLaurent QLaurent::conjugated() const {
  QLaurent out;
  for (const auto& [e, c] : c_) out.c_[-e] = c;
  return out;
}

QLaurent QLaurent::truncated_above(std::int64_t hi) const {
  QLaurent out;
  for (const auto& [e, c] : c_)
    if (e <= hi) out.c_[e] = c;
  return out;
}

std::int64_t QLaurent::min_exponent() const {
  if (c_.empty()) throw std::logic_error("min_exponent of zero");
  return c_.begin()->first;
}

std::int64_t QLaurent::max_exponent() const {
  if (c_.empty()) throw std::logic_error("max_exponent of zero");
  return c_.rbegin()->first;
}

std::string QLaurent::str(const std::string& symbol) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << symbol;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

std::int64_t SkewLattice::pairing_units(const std::vector<std::int64_t>& v,
                                        const std::vector<std::int64_t>& w) const {
  std::int64_t acc = 0;
  for (int a = 0; a < rank; ++a) {
    if (v[static_cast<size_t>(a)] == 0) continue;
    std::int64_t row = 0;
    for (int b = 0; b < rank; ++b) row += pairing_units(a, b) * w[static_cast<size_t>(b)];
    acc += v[static_cast<size_t>(a)] * row;
  }
  return acc;
}

SkewLattice double_torus_lattice(const Feed& f) {
  SkewLattice lat;
  lat.rank = 2 * f.n;
  lat.unit_den = f.lcm_d();
  lat.gram.assign(static_cast<size_t>(lat.rank) * lat.rank, 0);
  auto set = [&](int a, int b, std::int64_t v) {
    lat.gram[static_cast<size_t>(a) * lat.rank + b] = v;
  };
  for (int i = 0; i < f.n; ++i) {
    // <x_i, b_i> = 1/d_i
    set(f.n + i, i, lat.unit_den / f.d[static_cast<size_t>(i)]);
    set(i, f.n + i, -lat.unit_den / f.d[static_cast<size_t>(i)]);
    for (int j = 0; j < f.n; ++j) {
      if (i == j) continue;
      // <x_i, x_j> = eps_ij / d_j
      set(f.n + i, f.n + j, f.at(i, j) * (lat.unit_den / f.d[static_cast<size_t>(j)]));
    }
  }
  return lat;
}

SkewLattice weyl_pair_lattice() {
  SkewLattice lat;
  lat.rank = 2;
  lat.unit_den = 1;
  lat.gram = {0, 1, -1, 0};
  return lat;
}

QTorusElement QTorusElement::monomial(SkewLattice lat, QLaurent c, std::vector<std::int64_t> v) {
  if (static_cast<int>(v.size()) != lat.rank)
    throw std::invalid_argument("monomial: exponent vector has wrong length");
  QTorusElement out(std::move(lat));
  if (!c.is_zero()) out.c_[std::move(v)] = std::move(c);
  return out;
}

QTorusElement QTorusElement::basis(SkewLattice lat, int index) {
  std::vector<std::int64_t> v(static_cast<size_t>(lat.rank), 0);
  v[static_cast<size_t>(index)] = 1;
  return monomial(std::move(lat), QLaurent(1), std::move(v));
}

bool QTorusElement::single_term(QLaurent* c, std::vector<std::int64_t>* v) const {
  if (c_.size() != 1) return false;
  if (c) *c = c_.begin()->second;
  if (v) *v = c_.begin()->first;
  return true;
}

void QTorusElement::add_term(const std::vector<std::int64_t>& v, const QLaurent& c) {
  auto it = c_.find(v);
  if (it == c_.end()) {
    if (!c.is_zero()) c_[v] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) c_.erase(it);
}

QTorusElement QTorusElement::operator+(const QTorusElement& o) const {
  QTorusElement out = *this;
  if (out.lat_.rank == 0) out.lat_ = o.lat_;
  for (const auto& [v, c] : o.c_) out.add_term(v, c);
  return out;
}

QTorusElement QTorusElement::operator-(const QTorusElement& o) const {
  return *this + (-o);
}

QTorusElement QTorusElement::operator*(const QTorusElement& o) const {
  QTorusElement out(lat_.rank != 0 ? lat_ : o.lat_);
  for (const auto& [v, cv] : c_) {
    for (const auto& [w, cw] : o.c_) {
      std::vector<std::int64_t> sum(v.size());
      for (size_t a = 0; a < v.size(); ++a) sum[a] = v[a] + w[a];
      out.add_term(sum, (cv * cw).shifted(lat_.pairing_units(v, w)));
    }
  }
  return out;
}

QTorusElement QTorusElement::operator-() const {
  QTorusElement out = *this;
  for (auto& [v, c] : out.c_) c = -c;
  return out;
}

QTorusElement QTorusElement::scaled(const QLaurent& c) const {
  QTorusElement out(lat_);
  for (const auto& [v, cv] : c_) {
    QLaurent prod = cv * c;
    if (!prod.is_zero()) out.c_[v] = std::move(prod);
  }
  return out;
}

QTorusElement QTorusElement::star() const {
  QTorusElement out(lat_);
  for (const auto& [v, c] : c_) out.c_[v] = c.conjugated();
  return out;
}

std::string QTorusElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, c] : c_) {
    if (!first) out << "\n";
    out << "E(";
    for (size_t a = 0; a < v.size(); ++a) {
      if (a) out << ",";
      out << v[a];
    }
    out << ") : " << c.str();
    first = false;
  }
  return out.str();
}

namespace {

std::vector<std::int64_t> b_vector(const Feed& f, int i) {
  std::vector<std::int64_t> v(static_cast<size_t>(2 * f.n), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::vector<std::int64_t> x_vector(const Feed& f, int i) {
  std::vector<std::int64_t> v(static_cast<size_t>(2 * f.n), 0);
  v[static_cast<size_t>(f.n + i)] = 1;
  return v;
}

}  // namespace

QTorusElement quantum_b(const Feed& f, int i) {
  return QTorusElement::monomial(double_torus_lattice(f), QLaurent(1), b_vector(f, i));
}

QTorusElement quantum_x(const Feed& f, int i) {
  return QTorusElement::monomial(double_torus_lattice(f), QLaurent(1), x_vector(f, i));
}

QTorusElement quantum_tilde_x(const Feed& f, int i) {
  std::vector<std::int64_t> v = x_vector(f, i);
  for (int j = 0; j < f.n; ++j) v[static_cast<size_t>(j)] += f.at(i, j);
  return QTorusElement::monomial(double_torus_lattice(f), QLaurent(1), std::move(v));
}

QLaurent q_dir_power(const Feed& f, int i, std::int64_t m) {
  return QLaurent::unit(m * f.q_unit_exponent(i));
}

}  // namespace cvq
