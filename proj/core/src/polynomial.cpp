#include "qes/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qes {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::variable() {
  return RationalPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

RationalPoly RationalPoly::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

std::optional<int> RationalPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0) throw std::out_of_range("RationalPoly::coeff: negative index");
  if (static_cast<size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("RationalPoly::leading: zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::negate_variable() const {
  std::vector<Rational> c = coeffs_;
  for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return RationalPoly(std::move(c));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return RationalPoly(std::move(out));
}

bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }
bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

std::string RationalPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (k == 0 || !unit) out << mag.get_str();
    if (k > 0) {
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

DivModResult divmod(const RationalPoly& p, const RationalPoly& q) {
  if (q.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const auto& d = q.coeffs();
  const size_t dq = d.size() - 1;
  if (rem.size() <= dq) return {RationalPoly(), p};
  std::vector<Rational> quot(rem.size() - dq, Rational(0));
  for (size_t k = rem.size(); k-- > dq;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / d[dq];
    quot[k - dq] = f;
    for (size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= f * d[j];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly remainder(const RationalPoly& p, const RationalPoly& q) {
  return divmod(p, q).remainder;
}

ContentSplit content_split(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("content_split: zero polynomial");
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  std::vector<Rational> prim;
  prim.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) prim.push_back(Rational(c / content));
  if (prim.back() < 0) {
    content = -content;
    for (auto& c : prim) c = -c;
  }
  return {content, RationalPoly(std::move(prim))};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: both arguments zero");
  while (!b.is_zero()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return Rational(1 / a.leading()) * a;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (*p.degree() == 0) return p;
  RationalPoly g = poly_gcd(p, p.derivative());
  if (*g.degree() == 0) return p;
  return divmod(p, g).quotient;
}

}  // namespace qes
