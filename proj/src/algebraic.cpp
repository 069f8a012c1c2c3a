#include "lelong/algebraic.hpp"

#include "lelong/linalg.hpp"
#include "lelong/roots.hpp"

#include <cmath>
#include <cstdio>

namespace lelong {

NumberField::NumberField(QPoly modulus, Disk root) : m_(monic(modulus)), disk_(std::move(root)) {
  if (m_.degree() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
  if (m_.degree() == 1) disk_ = {ComplexQ(-m_.coeffs()[0]), Rational(0)};
}

QPoly NumberField::modulus() const {
  std::lock_guard lock(mu_);
  return m_;
}

Disk NumberField::root_disk() const {
  std::lock_guard lock(mu_);
  return disk_;
}

long NumberField::degree() const {
  std::lock_guard lock(mu_);
  return m_.degree();
}

std::optional<Rational> NumberField::rational_value() const {
  std::lock_guard lock(mu_);
  if (m_.degree() != 1) return std::nullopt;
  return -m_.coeffs()[0];
}

std::complex<double> NumberField::approx() const {
  std::lock_guard lock(mu_);
  return to_complex(disk_.center);
}

void NumberField::refine_locked(const Rational& max_radius) {
  if (disk_.radius <= max_radius) return;
  disk_ = refine_root(m_, disk_, max_radius);
}

void NumberField::refine(const Rational& max_radius) {
  std::lock_guard lock(mu_);
  refine_locked(max_radius);
}

bool NumberField::vanishes(const QPoly& e) {
  std::lock_guard lock(mu_);
  QPoly r = e % m_;
  if (r.is_zero()) return true;
  QPoly g = gcd(r, m_);
  if (g.degree() < 1) return false;
  QPoly h = monic(exact_div(m_, g));
  for (;;) {
    Ball th(disk_.center, disk_.radius);
    if (!eval(g, th).contains_zero()) {
      m_ = h;
      break;
    }
    if (!eval(h, th).contains_zero()) {
      m_ = g;
      break;
    }
    refine_locked(disk_.radius / 16);
  }
  if (m_.degree() == 1) disk_ = {ComplexQ(-m_.coeffs()[0]), Rational(0)};
  return (e % m_).is_zero();
}

Ball NumberField::enclose(const QPoly& e, const Rational& max_radius) {
  std::lock_guard lock(mu_);
  QPoly r = e % m_;
  for (;;) {
    Ball b = eval(r, Ball(disk_.center, disk_.radius));
    if (b.rad() <= max_radius || disk_.radius.is_zero()) return b;
    refine_locked(disk_.radius / 256);
  }
}

FieldElem::FieldElem(FieldPtr field, const QPoly& rep) { *this = make(field, rep); }

FieldElem FieldElem::make(const FieldPtr& field, QPoly rep) {
  FieldElem out;
  if (!field) {
    if (rep.degree() > 0) throw std::invalid_argument("rational element with nonconstant representative");
    out.q_ = rep.coeff(0);
    return out;
  }
  if (auto v = field->rational_value()) {
    out.q_ = rep(*v);
    return out;
  }
  rep = rep % field->modulus();
  if (rep.degree() <= 0) {
    out.q_ = rep.coeff(0);
    return out;
  }
  out.field_ = field;
  out.rep_ = std::move(rep);
  return out;
}

QPoly FieldElem::rep() const { return field_ ? rep_ : QPoly(q_); }

namespace {

FieldPtr common_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field()) return b.field();
  if (!b.field() || a.field() == b.field()) return a.field();
  throw std::logic_error("arithmetic between different number fields");
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  FieldPtr f = common_field(a, b);
  if (!f) return FieldElem(a.q_ + b.q_);
  return FieldElem::make(f, a.rep() + b.rep());
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  FieldPtr f = common_field(a, b);
  if (!f) return FieldElem(a.q_ - b.q_);
  return FieldElem::make(f, a.rep() - b.rep());
}

FieldElem operator-(const FieldElem& a) {
  if (!a.field_) return FieldElem(-a.q_);
  return FieldElem::make(a.field_, -a.rep_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldPtr f = common_field(a, b);
  if (!f) return FieldElem(a.q_ * b.q_);
  if (!a.field_) return FieldElem::make(f, b.rep_ * a.q_);
  if (!b.field_) return FieldElem::make(f, a.rep_ * b.q_);
  return FieldElem::make(f, (a.rep_ * b.rep_) % f->modulus());
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (!b.field_) {
    if (b.q_.is_zero()) throw std::domain_error("division by zero");
    return a * FieldElem(1 / b.q_);
  }
  for (;;) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    auto [g, s, t] = ext_gcd(b.rep_, b.field_->modulus());
    (void)t;
    if (g.degree() == 0) return a * FieldElem::make(b.field_, s);
  }
}

bool operator==(const FieldElem& a, const FieldElem& b) { return is_zero(a - b); }

bool is_zero(const FieldElem& a) {
  if (!a.field()) return a.rational().is_zero();
  return a.field()->vanishes(a.rep());
}

Ball enclose(const FieldElem& a, const Rational& max_radius) {
  if (!a.field()) return Ball(a.rational());
  return a.field()->enclose(a.rep(), max_radius);
}

std::complex<double> approx(const FieldElem& a) {
  if (!a.field()) return {to_double(a.rational()), 0.0};
  return to_complex(enclose(a, Rational(Integer(1), Integer(1) << 64)).mid());
}

std::string to_string(const FieldElem& a) {
  if (!a.field()) return to_string(a.rational());
  Ball b = enclose(a, Rational(Integer(1), Integer(1) << 64));
  char buf[96];
  double re = to_double(b.mid().re);
  if (abs(b.mid().im) <= b.rad()) {
    std::snprintf(buf, sizeof buf, "~%.15g", re);
  } else {
    std::snprintf(buf, sizeof buf, "~%.15g%+.15gi", re, to_double(b.mid().im));
  }
  return buf;
}

FieldElem Embedding::operator()(const FieldElem& a) const {
  if (!a.field()) return a;
  if (a.field() == to) return a;
  if (a.field() != from) throw std::logic_error("embedding applied to an element of another field");
  return FieldElem(to, compose(a.rep(), image) % to->modulus());
}

KPoly Embedding::operator()(const KPoly& p) const {
  std::vector<FieldElem> c;
  for (const auto& v : p.coeffs()) c.push_back((*this)(v));
  return KPoly(std::move(c));
}

Embedding compose(const Embedding& f, const Embedding& g) {
  if (f.to != g.from) throw std::logic_error("embedding composition mismatch");
  if (!g.to) return f;
  QPoly img = compose(f.image, g.image) % g.to->modulus();
  return {f.from, g.to, img};
}

FieldDegreeError::FieldDegreeError(long req)
    : std::runtime_error("coefficient field degree " + std::to_string(req) + " exceeds the configured bound"),
      required(req) {}

namespace {

using AlgElem = std::vector<QPoly>;  // coefficients of z^j, each reduced mod m(y)

struct Algebra {
  QPoly m;
  std::vector<QPoly> phi;  // low coefficients of the monic relation in z
  long d = 0;
  long n = 0;

  AlgElem unit(long i, long j) const {
    AlgElem e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(j)] = QPoly::monomial(Rational(1), static_cast<std::size_t>(i));
    return e;
  }
  AlgElem mul_y(const AlgElem& e) const {
    AlgElem out(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) out[j] = e[j].shifted(1) % m;
    return out;
  }
  AlgElem mul_z(const AlgElem& e) const {
    AlgElem out(e.size());
    for (std::size_t j = 1; j < e.size(); ++j) out[j] = e[j - 1];
    const QPoly& top = e.back();
    if (!top.is_zero())
      for (std::size_t l = 0; l < e.size(); ++l) out[l] -= (top * phi[l]) % m;
    return out;
  }
  AlgElem mul_gamma(const AlgElem& e, long k) const {
    AlgElem a = mul_z(e);
    if (k != 0) {
      AlgElem b = mul_y(e);
      for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j] * Rational(k);
    }
    return a;
  }
  QVector coords(const AlgElem& e) const {
    QVector v = QVector::Zero(d * n);
    for (long j = 0; j < n; ++j)
      for (long i = 0; i < d; ++i) v(j * d + i) = e[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i));
    return v;
  }
};

long shear_candidate(int idx) {
  // 0, 1, -1, 2, -2, ...
  return idx == 0 ? 0 : (idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2));
}

// Decides whether T(γ) at the root isolated by `g` equals θ of `base`.
bool maps_to_theta(const QPoly& r_poly, Disk g, const QPoly& t, NumberField& base) {
  for (int it = 0; it < 200; ++it) {
    Disk th = base.root_disk();
    Disk img = eval(t, Ball(g.center, g.radius)).disk();
    if (img.inside(th)) return true;
    if (!img.intersects(th)) return false;
    bool image_wide = img.radius * 4 > th.radius;
    if (image_wide && !g.radius.is_zero()) {
      g = refine_root(r_poly, g, g.radius / 256);
    } else if (!th.radius.is_zero()) {
      base.refine(th.radius / 16);
    } else {
      g = refine_root(r_poly, g, g.radius / 256);
    }
  }
  throw std::runtime_error("could not match an extension root to its base field");
}

}  // namespace

std::vector<AdjoinedRoot> adjoin_roots(const KPoly& phi_in, const FieldPtr& base_in, long degree_cap,
                                       bool first_only) {
  for (const auto& c : phi_in.coeffs())
    if (c.field() && c.field() != base_in) throw std::logic_error("polynomial coefficients outside the base field");
  std::vector<AdjoinedRoot> out;
  if (phi_in.degree() < 1) return out;
  KPoly phi = squarefree_part(phi_in);
  const Embedding identity{base_in, base_in, QPoly::x()};

  if (phi.degree() == 1) {
    out.push_back({base_in, identity, -phi.coeff(0) / phi.coeff(1)});
    return out;
  }

  bool all_rational = true;
  for (const auto& c : phi.coeffs()) all_rational = all_rational && c.is_rational();
  std::optional<Rational> base_value = base_in ? base_in->rational_value() : std::nullopt;
  bool base_is_q = !base_in || base_value.has_value();

  if (all_rational) {
    std::vector<Rational> qc;
    for (const auto& c : phi.coeffs()) qc.push_back(c.rational());
    QPoly p(std::move(qc));
    QPoly rest = p;
    for (const auto& r : rational_roots(p)) {
      out.push_back({base_in, identity, FieldElem(r)});
      if (first_only) return out;
      rest = exact_div(rest, QPoly(std::vector<Rational>{-r, Rational(1)}));
    }
    if (rest.degree() < 1) return out;
    if (base_is_q) {
      if (rest.degree() > degree_cap) throw FieldDegreeError(rest.degree());
      for (const auto& disk : isolate_roots(rest)) {
        auto field = std::make_shared<NumberField>(rest, disk);
        QPoly img = base_in ? QPoly(*base_value) : QPoly::x();
        out.push_back({field, Embedding{base_in, field, img}, FieldElem::generator(field)});
        if (first_only) return out;
      }
      return out;
    }
    std::vector<FieldElem> kc;
    for (const auto& c : rest.coeffs()) kc.emplace_back(c);
    phi = KPoly(std::move(kc));
  }
  if (base_is_q) throw std::logic_error("irrational coefficients over a rational base");

  Algebra alg;
  alg.m = base_in->modulus();
  alg.d = alg.m.degree();
  alg.n = phi.degree();
  const long big_n = alg.d * alg.n;
  if (big_n > degree_cap) throw FieldDegreeError(big_n);
  for (long l = 0; l < alg.n; ++l) alg.phi.push_back(phi.coeff(static_cast<std::size_t>(l)).rep() % alg.m);

  long k = 0;
  QPoly r_poly;
  QMatrix mg(big_n, big_n);
  for (int idx = 0;; ++idx) {
    if (idx > 64) throw std::runtime_error("no primitive element found");
    k = shear_candidate(idx);
    for (long j = 0; j < alg.n; ++j)
      for (long i = 0; i < alg.d; ++i) mg.col(j * alg.d + i) = alg.coords(alg.mul_gamma(alg.unit(i, j), k));
    r_poly = charpoly(mg);
    if (gcd(r_poly, derivative(r_poly)).degree() == 0) break;
  }

  // y as a polynomial in γ, from the Krylov basis 1, γ, γ², ...
  QMatrix krylov(big_n, big_n);
  AlgElem v = alg.unit(0, 0);
  for (long c = 0; c < big_n; ++c) {
    krylov.col(c) = alg.coords(v);
    v = alg.mul_gamma(v, k);
  }
  LinearSolution sol = solve_exact(krylov, alg.coords(alg.unit(alg.d > 1 ? 1 : 0, 0)));
  if (!sol.consistent) throw std::logic_error("primitive element does not generate the algebra");
  std::vector<Rational> tc(sol.solution.data(), sol.solution.data() + sol.solution.size());
  QPoly t(std::move(tc));
  QPoly root_rep = QPoly::x() - t * Rational(k);

  for (const auto& disk : isolate_roots(r_poly)) {
    if (!maps_to_theta(r_poly, disk, t, *base_in)) continue;
    auto field = std::make_shared<NumberField>(r_poly, disk);
    out.push_back({field, Embedding{base_in, field, t}, FieldElem(field, root_rep)});
    if (first_only) return out;
  }
  if (static_cast<long>(out.size()) != alg.n) throw std::logic_error("extension root count mismatch");
  return out;
}

}  // namespace lelong
