#include "qes/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qes {

SturmChain::SturmChain(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  chain_.push_back(p);
  RationalPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(std::move(d));
  while (true) {
    RationalPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

namespace {

int count_flips(const std::vector<int>& signs) {
  int flips = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++flips;
    prev = s;
  }
  return flips;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign(q(x)));
  return count_flips(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign(q.leading()));
  return count_flips(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) {
    int s = sign(q.leading());
    if (*q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_flips(signs);
}

int SturmChain::count_roots_between(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("count_roots_between: requires a < b");
  if (chain_.front()(a) == 0 || chain_.front()(b) == 0)
    throw std::domain_error("count_roots_between: endpoint is a root");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_distinct_real_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational cauchy_root_bound(const RationalPoly& p) {
  if (!p.degree() || *p.degree() < 1)
    throw std::domain_error("cauchy_root_bound: degree must be >= 1");
  Rational lead = abs(p.leading());
  Rational largest(0);
  const auto& c = p.coeffs();
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    Rational m = abs(c[k]);
    if (m > largest) largest = m;
  }
  return Rational(1 + largest / lead);
}

namespace {

struct Segment {
  Rational lo, hi;
  int vlo, vhi;
};

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  if (*p.degree() == 0) return out;

  RationalPoly sf = squarefree_part(p);
  SturmChain chain(sf);
  const Rational bound = cauchy_root_bound(sf);

  // Every segment on the stack has non-root endpoints, so a count of one
  // certifies a root strictly inside the open interval.
  std::vector<RootBracket> brackets;
  std::vector<Segment> stack;
  {
    int vlo = chain.variations_at(-bound);
    int vhi = chain.variations_at(bound);
    if (vlo - vhi > 0) stack.push_back({-bound, bound, vlo, vhi});
  }
  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    const int count = s.vlo - s.vhi;
    if (count == 0) continue;
    if (count == 1) {
      brackets.push_back({s.lo, s.hi, 0, 0});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (sf(mid) == 0) {
      // rational root exactly at the midpoint: carve out a private bracket
      Rational delta = (s.hi - s.lo) / 4;
      while (sf(mid - delta) == 0 || sf(mid + delta) == 0 ||
             chain.count_roots_between(mid - delta, mid + delta) != 1)
        delta /= 2;
      brackets.push_back({Rational(mid - delta), Rational(mid + delta), 0, 0});
      int vml = chain.variations_at(mid - delta);
      int vmr = chain.variations_at(mid + delta);
      stack.push_back({Rational(mid + delta), s.hi, vmr, s.vhi});
      stack.push_back({s.lo, Rational(mid - delta), s.vlo, vml});
    } else {
      int vm = chain.variations_at(mid);
      stack.push_back({mid, s.hi, vm, s.vhi});
      stack.push_back({s.lo, mid, s.vlo, vm});
    }
  }
  std::sort(brackets.begin(), brackets.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });

  // Multiplicities from the gcd tower: a root of multiplicity m survives
  // into exactly the first m-1 levels.
  std::vector<RationalPoly> tower;
  {
    RationalPoly g = poly_gcd(p, p.derivative());
    while (g.degree() && *g.degree() >= 1) {
      tower.push_back(g);
      g = poly_gcd(g, g.derivative());
    }
  }
  std::vector<SturmChain> tower_chains;
  tower_chains.reserve(tower.size());
  for (const auto& g : tower) tower_chains.emplace_back(g);

  out.reserve(brackets.size());
  for (auto& b : brackets) {
    b.sign_lo = sign(p(b.lo));
    b.sign_hi = sign(p(b.hi));
    int mult = 1;
    for (const auto& tc : tower_chains)
      if (tc.count_roots_between(b.lo, b.hi) > 0) ++mult;
    out.push_back({b, mult});
  }
  return out;
}

RefinedRoot refine_root_detailed(const RationalPoly& p, const RootBracket& bracket,
                                 int digits, const Rational& value_cap) {
  if (p.is_zero()) throw std::invalid_argument("refine_root: zero polynomial");
  if (digits < 1) throw std::invalid_argument("refine_root: digits must be >= 1");
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("refine_root: empty bracket");

  RationalPoly sf = squarefree_part(p);
  if (sf(bracket.lo) == 0 || sf(bracket.hi) == 0)
    throw std::domain_error("refine_root: bracket endpoint is a root");
  SturmChain chain(sf);
  if (chain.count_roots_between(bracket.lo, bracket.hi) != 1)
    throw std::domain_error("refine_root: bracket does not isolate exactly one root");

  Rational lo = bracket.lo;
  Rational hi = bracket.hi;
  const int sign_lo = sign(sf(lo));
  const Rational width_target = pow10(-digits);

  while (true) {
    if (hi - lo < width_target) {
      Rational m((lo + hi) / 2);
      Rational pm = p(m);
      if (pm == 0) return {m, {lo, hi, sign(p(lo)), sign(p(hi))}, true};
      if (value_cap == 0 || Rational(abs(pm)) <= value_cap)
        return {m, {lo, hi, sign(p(lo)), sign(p(hi))}, false};
    }
    Rational mid((lo + hi) / 2);
    Rational v = sf(mid);
    if (v == 0) return {mid, bracket, true};
    if (sign(v) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

Rational refine_root(const RationalPoly& p, const RootBracket& bracket, int digits) {
  return refine_root_detailed(p, bracket, digits).value;
}

}  // namespace qes
