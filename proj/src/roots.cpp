#include "lelong/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lelong {

namespace {

std::vector<std::complex<double>> seeds(const QPoly& p) {
  const long n = p.degree();
  std::vector<std::complex<double>> out;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  bool finite = true;
  for (long i = 0; i < n; ++i) {
    double v = -to_double(p.coeffs()[static_cast<std::size_t>(i)] / p.lead());
    finite = finite && std::isfinite(v);
    c(i, n - 1) = v;
    if (i > 0) c(i, i - 1) = 1.0;
  }
  if (finite) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    if (es.info() == Eigen::Success) {
      for (long i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    }
  }
  bool ok = out.size() == static_cast<std::size_t>(n);
  for (auto& z : out) ok = ok && std::isfinite(z.real()) && std::isfinite(z.imag());
  if (!ok) {
    out.clear();
    for (long i = 0; i < n; ++i) out.push_back(std::polar(1.0, 0.4 + 6.283185307179586 * static_cast<double>(i) / static_cast<double>(n)));
  }
  // Coincident seeds stall Aberth; nudge duplicates apart.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(out[i] - out[j]) < 1e-9 * (1.0 + std::abs(out[i])))
        out[i] += std::complex<double>(1e-6, 1e-6 * static_cast<double>(i + 1)) * (1.0 + std::abs(out[i]));
  return out;
}

ComplexQ horner(const QPoly& p, const ComplexQ& z) {
  ComplexQ acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + ComplexQ(*it);
  return acc;
}

Rational bits_scale(unsigned bits) { return Rational(Integer(1) << bits); }

// Aberth iterations at fixed working precision. Returns the largest squared
// correction of the last sweep.
Rational aberth(const QPoly& p, const QPoly& dp, std::vector<ComplexQ>& z, unsigned bits, int sweeps) {
  Rational last = 0;
  for (int s = 0; s < sweeps; ++s) {
    last = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      ComplexQ pv = horner(p, z[i]);
      if (pv.is_zero()) continue;
      ComplexQ dv = horner(dp, z[i]);
      ComplexQ sum(0);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        ComplexQ d = z[i] - z[j];
        if (!d.is_zero()) sum = sum + ComplexQ(1) / d;
      }
      ComplexQ denom = dv - pv * sum;
      if (denom.is_zero()) continue;
      ComplexQ step = round(pv / denom, bits + 8);
      z[i] = round(z[i] - step, bits);
      Rational n2 = step.norm2();
      if (n2 > last) last = n2;
    }
    Rational tiny = 1 / bits_scale(2 * bits);
    if (last < tiny) break;
  }
  return last;
}

bool certify(const QPoly& p, const std::vector<ComplexQ>& z, const Rational& max_radius, std::vector<Disk>& out) {
  const std::size_t n = z.size();
  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    ComplexQ denom(p.lead());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ComplexQ d = z[i] - z[j];
      if (d.is_zero()) return false;
      denom = denom * d;
    }
    ComplexQ w = horner(p, z[i]) / denom;
    Rational r = w.is_zero() ? Rational(0) : Rational(static_cast<long>(n)) * abs_upper(w, 64);
    if (!r.is_zero()) {
      // Keep radii short: round up on a grid a little finer than r.
      long e = static_cast<long>(msb(numerator(r))) - static_cast<long>(msb(denominator(r)));
      long b = std::max<long>(0, 8 - e);
      r = round_up(r, static_cast<unsigned>(b));
    }
    if (max_radius > 0 && r > max_radius) return false;
    out.push_back({z[i], r});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = out[i].radius + out[j].radius;
      // Strict separation.
      if ((out[i].center - out[j].center).norm2() <= s * s) return false;
    }
  return true;
}

void sort_disks(std::vector<Disk>& d) {
  std::sort(d.begin(), d.end(), [](const Disk& a, const Disk& b) {
    if (a.center.re != b.center.re) return a.center.re < b.center.re;
    return a.center.im < b.center.im;
  });
}

}  // namespace

std::vector<Disk> isolate_roots(const QPoly& input, const Rational& max_radius) {
  if (input.degree() < 1) return {};
  QPoly p = monic(input);
  if (p.degree() == 1) return {Disk{ComplexQ(-p.coeffs()[0]), Rational(0)}};
  QPoly dp = derivative(p);
  std::vector<ComplexQ> z;
  for (auto s : seeds(p)) z.push_back(round(from_complex(s), 53));
  std::vector<Disk> out;
  for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
    aberth(p, dp, z, bits, 60);
    if (certify(p, z, max_radius, out)) {
      sort_disks(out);
      return out;
    }
  }
  throw std::runtime_error("root isolation did not converge");
}

Disk refine_root(const QPoly& p, const Disk& d, const Rational& max_radius) {
  if (d.radius <= max_radius) return d;
  Rational target = max_radius;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto disks = isolate_roots(p, target);
    const Disk* hit = nullptr;
    int hits = 0;
    for (const auto& e : disks) {
      if (e.intersects(d)) {
        hit = &e;
        ++hits;
      }
    }
    if (hits == 1 && hit->inside(d)) return *hit;
    if (hits == 1) {
      // The unique candidate holds the root; clip it to the old disk.
      Disk c = *hit;
      if (c.radius <= max_radius) return c;
    }
    target /= 16;
  }
  throw std::runtime_error("root refinement failed");
}

std::vector<Rational> rational_roots(const QPoly& input) {
  std::vector<Rational> out;
  if (input.degree() < 1) return out;
  QPoly p = primitive_integer(squarefree_part(input));
  // Strip zero roots first.
  std::size_t low = 0;
  while (low < p.size() && p.coeffs()[low].is_zero()) ++low;
  if (low > 0) {
    out.push_back(0);
    p = QPoly(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
  }
  if (p.degree() >= 1) {
    Integer lead = numerator(p.lead());
    Rational rad(Integer(1), Integer(4) * lead);
    for (const auto& disk : isolate_roots(p, rad)) {
      if (abs(disk.center.im) > disk.radius) continue;
      Rational cand(floor(disk.center.re * Rational(lead) + Rational(1, 2)), lead);
      if (p(cand).is_zero()) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lelong
