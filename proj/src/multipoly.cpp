#include "lelong/multipoly.hpp"

#include "lelong/linalg.hpp"

#include <cctype>

namespace lelong {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& constant) : vars_(std::move(vars)) {
  add_term(Exponents(vars_.size(), 0), constant);
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  Exponents e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(vars, e, Rational(1));
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("unknown variable " + name);
  return variable(vars, static_cast<std::size_t>(it - vars.begin()));
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, Exponents e, const Rational& c) {
  MultiPoly p(vars);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                                [](unsigned v) { return v == 0; }));
}

std::optional<std::size_t> MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

long MultiPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (unsigned v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

long MultiPoly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var]);
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::lead_coeff() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::homogeneous_part(long k) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (unsigned v : e) s += v;
    if (s == k) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::relabel(const std::vector<std::string>& vars, const std::vector<std::size_t>& map) const {
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      f.at(map.at(i)) += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m *= lelong::pow(point[i], e[i]);
    acc += m;
  }
  return acc;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
    Rational a = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else if (denominator(a) == 1) {
      out += to_string(a) + mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        MultiPoly d = unary();
        if (!d.is_constant()) throw ParseError(at, "division by a non-constant");
        if (d.is_zero()) throw ParseError(at, "division by zero");
        acc *= 1 / d.lead_coeff();
      } else if (ident_start(c) || c == '(') {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "expected a non-negative integer exponent");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) throw ParseError(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(vars_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (ident_start(c)) {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError(start, "unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) { return Parser(text, vars).run(); }

HomogPoly homogenize(const MultiPoly& p, const std::string& t) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  std::vector<std::string> vars{t};
  vars.insert(vars.end(), p.vars().begin(), p.vars().end());
  long d = p.total_degree();
  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(vars.size());
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      f[i + 1] = e[i];
      s += e[i];
    }
    f[0] = static_cast<unsigned>(d - s);
    out.add_term(f, c);
  }
  return {out, d};
}

MultiPoly dehomogenize(const HomogPoly& h) {
  const auto& v = h.poly.vars();
  std::vector<std::string> vars(v.begin() + 1, v.end());
  MultiPoly out(vars);
  for (const auto& [e, c] : h.poly.terms()) out.add_term(Exponents(e.begin() + 1, e.end()), c);
  return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment) {
  std::vector<const MultiPoly*> images;
  for (const auto& name : p.vars()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw std::invalid_argument("variable " + name + " not assigned");
    images.push_back(&it->second);
  }
  if (images.empty()) return p;
  const auto& vars = images.front()->vars();
  for (auto* im : images)
    if (im->vars() != vars) throw std::invalid_argument("substitution images over different variable lists");
  // Cached powers of each image.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(vars, Rational(1));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly m(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = m * power(i, e[i]);
    out += m;
  }
  return out;
}

namespace {

std::size_t require_var(const MultiPoly& u, const std::string& y) {
  auto iy = u.var_index(y);
  if (!iy) throw std::invalid_argument("polynomial does not use variable " + y);
  for (const auto& [e, c] : u.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *iy && e[i] != 0) throw std::invalid_argument("expected a polynomial in " + y + " only");
  return *iy;
}

}  // namespace

MultiPoly reduce_mod_relation(const MultiPoly& u, unsigned e, const std::string& x, const std::string& y) {
  if (e == 0) throw std::invalid_argument("relation exponent must be positive");
  std::size_t iy = require_var(u, y);
  MultiPoly out({x, y});
  for (const auto& [ex, c] : u.terms()) {
    unsigned j = ex[iy];
    out.add_term({j / e, j % e}, c);
  }
  return out;
}

InterpResult interp_exists(const MultiPoly& target, unsigned e, unsigned d, const std::string& x,
                           const std::string& y) {
  if (e == 0) throw std::invalid_argument("relation exponent must be positive");
  std::size_t iy = require_var(target, y);
  // Columns x^j y^l with j + l <= d, by total degree then j descending.
  std::vector<std::pair<unsigned, unsigned>> cols;
  for (unsigned deg = 0; deg <= d; ++deg)
    for (unsigned j = deg + 1; j-- > 0;) cols.emplace_back(j, deg - j);
  unsigned top = 0;
  for (const auto& [ex, c] : target.terms()) top = std::max(top, ex[iy]);
  for (const auto& [j, l] : cols) top = std::max(top, j * e + l);
  const auto rows = static_cast<Eigen::Index>(top + 1);
  QMatrix a = QMatrix::Zero(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) a(cols[k].first * e + cols[k].second, static_cast<Eigen::Index>(k)) = 1;
  QVector b = QVector::Zero(rows);
  for (const auto& [ex, c] : target.terms()) b(ex[iy]) = c;

  LinearSolution sol = solve_exact(a, b);
  InterpResult out;
  out.feasible = sol.consistent;
  if (sol.consistent) {
    MultiPoly q({x, y});
    for (std::size_t k = 0; k < cols.size(); ++k) q.add_term({cols[k].first, cols[k].second}, sol.solution(static_cast<Eigen::Index>(k)));
    out.solution = q;
    return out;
  }
  // Highest row exponent touched by any certificate.
  std::optional<unsigned> best;
  const QVector* best_cert = nullptr;
  for (const auto& cert : sol.certificates) {
    for (Eigen::Index s = rows - 1; s >= 0; --s) {
      if (cert(s).is_zero() || b(s).is_zero()) continue;
      if (!best || static_cast<unsigned>(s) > *best) {
        best = static_cast<unsigned>(s);
        best_cert = &cert;
      }
      break;
    }
  }
  out.certificate = best;
  if (best_cert) out.farkas.assign(best_cert->data(), best_cert->data() + best_cert->size());
  return out;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    out.add_term(f, c * e[var]);
  }
  return out;
}

QPoly to_upoly(const MultiPoly& p, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(p.degree_in(var) + 1, 0)));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    c[e[var]] += v;
  }
  return QPoly(std::move(c));
}

MultiPoly from_upoly(const QPoly& p, const std::vector<std::string>& vars, std::size_t var) {
  MultiPoly out(vars);
  Exponents e(vars.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    e[var] = static_cast<unsigned>(k);
    out.add_term(e, p.coeffs()[k]);
  }
  return out;
}

namespace {

// Q[x][y] view: coefficient k of y, each a polynomial in x.
using YPoly = std::vector<QPoly>;

YPoly to_ypoly(const MultiPoly& p) {
  if (p.nvars() != 2) throw std::invalid_argument("bivariate operation on a polynomial with " + std::to_string(p.nvars()) + " variables");
  YPoly out(static_cast<std::size_t>(std::max<long>(p.degree_in(1) + 1, 0)));
  for (const auto& [e, c] : p.terms()) out[e[1]] += QPoly::monomial(c, e[0]);
  return out;
}

MultiPoly from_ypoly(const YPoly& p, const std::vector<std::string>& vars) {
  MultiPoly out(vars);
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t i = 0; i < p[k].size(); ++i) out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(k)}, p[k].coeffs()[i]);
  return out;
}

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly content(const YPoly& p) {
  QPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

YPoly primitive(YPoly p) {
  QPoly c = content(p);
  if (c.is_zero()) return p;
  for (auto& v : p) v = exact_div(v, c);
  return p;
}

YPoly prem(YPoly a, const YPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    QPoly la = a.back();
    for (auto& v : a) v = v * b.back();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

MultiPoly normalise(MultiPoly p) {
  if (!p.is_zero()) p *= 1 / p.lead_coeff();
  return p;
}

}  // namespace

MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("gcd2: variable lists differ");
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  if (pa.empty()) return normalise(b);
  if (pb.empty()) return normalise(a);
  QPoly c = gcd(content(pa), content(pb));
  pa = primitive(pa);
  pb = primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    YPoly r = prem(pa, pb);
    pa = std::move(pb);
    pb = r.empty() ? r : primitive(r);
  }
  YPoly g = pa.size() <= 1 ? YPoly{QPoly(Rational(1))} : primitive(pa);
  for (auto& v : g) v = v * c;
  return normalise(from_ypoly(g, a.vars()));
}

MultiPoly div2(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("div2: variable lists differ");
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  if (pb.empty()) throw std::domain_error("division by zero polynomial");
  trim(pa);
  YPoly q(pa.size() >= pb.size() ? pa.size() - pb.size() + 1 : 0);
  while (!pa.empty() && pa.size() >= pb.size()) {
    std::size_t shift = pa.size() - pb.size();
    auto [f, r] = divmod(pa.back(), pb.back());
    if (!r.is_zero()) throw std::domain_error("inexact bivariate division");
    q[shift] = f;
    for (std::size_t k = 0; k < pb.size(); ++k) pa[k + shift] -= f * pb[k];
    trim(pa);
  }
  if (!pa.empty()) throw std::domain_error("inexact bivariate division");
  return from_ypoly(q, a.vars());
}

}  // namespace lelong
