#include <doctest.h>

#include <qes/families.hpp>

#include <cmath>

using namespace qes;

namespace {

constexpr double kSqrt5Over2 = 1.5811388300841897;
constexpr double kSqrt1Over2 = 0.7071067811865475;
constexpr double kSqrt3Over2 = 1.224744871391589;
constexpr double kQuartPlus = 2.0340743862547622;   // sqrt((9+sqrt(57))/4)
constexpr double kQuartMinus = 0.6021141014644256;  // sqrt((9-sqrt(57))/4)

// Exact proportionality over Q: a * lead(b) == b * lead(a).
bool proportional(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return Rational(b.leading()) * a == Rational(a.leading()) * b;
}

}  // namespace

TEST_CASE("recurrence seeds per parity") {
  auto even = coefficients_by_recurrence({3, Parity::even});
  REQUIRE(even.a.size() == 4);
  CHECK(even.a[0] == RationalPoly::constant(Rational(1)));
  CHECK(even.a[1] == -RationalPoly::variable());

  auto odd = coefficients_by_recurrence({3, Parity::odd});
  REQUIRE(odd.a.size() == 4);
  CHECK(odd.a[0].is_zero());
  CHECK(odd.a[1] == RationalPoly::constant(Rational(1)));
  // the n = 0 row reproduces the boundary value instead of clashing with it
  CHECK(odd.a[2] == -RationalPoly::variable());

  CHECK_THROWS_AS(coefficients_by_recurrence({-1, Parity::even}), std::invalid_argument);
}

TEST_CASE("second even coefficient is d^2 - N") {
  for (int N = 2; N <= 9; ++N) {
    auto table = coefficients_by_recurrence({N, Parity::even});
    CHECK(table.a[2] ==
          RationalPoly(std::vector<Rational>{Rational(-N), Rational(0), Rational(1)}));
  }
}

TEST_CASE("known table rows") {
  // N = 3 even: a_3 = (8d - 2d^3)/3
  auto even3 = coefficients_by_recurrence({3, Parity::even});
  CHECK(even3.a[3] == make_rational(1, 3) * RationalPoly::from_integers({0, 8, 0, -2}));

  // N = 3 odd: a_3 = (2d^2 - 2)/3
  auto odd3 = coefficients_by_recurrence({3, Parity::odd});
  CHECK(odd3.a[3] == make_rational(1, 3) * RationalPoly::from_integers({-2, 0, 2}));

  // N = 4 odd: a_3 = (2d^2 - 3)/3, a_4 = (5d - 2d^3)/6
  auto odd4 = coefficients_by_recurrence({4, Parity::odd});
  CHECK(odd4.a[3] == make_rational(1, 3) * RationalPoly::from_integers({-3, 0, 2}));
  CHECK(odd4.a[4] == make_rational(1, 6) * RationalPoly::from_integers({0, 5, 0, -2}));

  // N = 4 even: a_4 = (2d^4 - 13d^2 + 8)/6
  auto even4 = coefficients_by_recurrence({4, Parity::even});
  CHECK(even4.a[4] == make_rational(1, 6) * RationalPoly::from_integers({8, 0, -13, 0, 2}));
}

TEST_CASE("recurrence rows close exactly") {
  const RationalPoly d = RationalPoly::variable();
  for (int N = 0; N <= 10; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      QESProblem prob{N, parity};
      auto table = coefficients_by_recurrence(prob);
      RationalPoly ext = extended_coefficient(prob);
      auto at = [&](int i) -> RationalPoly {
        if (i <= N) return table.a[static_cast<size_t>(i)];
        if (i == N + 1) return ext;
        return RationalPoly();
      };
      // every row n = 0..N-2 is satisfied identically in d; row N-1
      // defines the extension
      for (int n = 0; n + 2 <= N + 1; ++n) {
        RationalPoly row = make_rational(2L * (N - n)) * at(n) +
                           make_rational(2L * (n + 1)) * (d * at(n + 1)) +
                           make_rational(static_cast<long>(n + 1) * (n + 2)) * at(n + 2);
        CHECK(row.is_zero());
      }
    }
  }
}

TEST_CASE("determinant route equals the recurrence route everywhere") {
  for (int N = 0; N <= 12; ++N) {
    QESProblem even{N, Parity::even};
    auto even_table = coefficients_by_recurrence(even);
    for (int k = 1; k <= N; ++k)
      CHECK(coefficients_by_determinant(even, k) == even_table.a[static_cast<size_t>(k)]);
    CHECK(coefficients_by_determinant(even, N + 1) == extended_coefficient(even));

    QESProblem odd{N, Parity::odd};
    auto odd_table = coefficients_by_recurrence(odd);
    for (int k = 1; k + 1 <= N; ++k)
      CHECK(coefficients_by_determinant(odd, k) == odd_table.a[static_cast<size_t>(k) + 1]);
    if (N >= 1) CHECK(coefficients_by_determinant(odd, N) == extended_coefficient(odd));
  }
}

TEST_CASE("determinant route rejects out-of-range indices") {
  CHECK_THROWS_AS(coefficients_by_determinant({3, Parity::even}, 0), std::out_of_range);
  CHECK_THROWS_AS(coefficients_by_determinant({3, Parity::even}, 5), std::out_of_range);
  CHECK_THROWS_AS(coefficients_by_determinant({3, Parity::odd}, 4), std::out_of_range);
  CHECK_THROWS_AS(coefficients_by_determinant({0, Parity::odd}, 1), std::out_of_range);
}

TEST_CASE("continuant spot values") {
  // even N = 2: D_3 = 8d^3 - 20d
  CHECK(continuant_determinant({2, Parity::even}, 3) ==
        RationalPoly::from_integers({0, -20, 0, 8}));
  // even N = 3: D_4 = 48d^4 - 216d^2 + 72
  CHECK(continuant_determinant({3, Parity::even}, 4) ==
        RationalPoly::from_integers({72, 0, -216, 0, 48}));
  // odd N = 3: D_3 = 48d^3 - 72d
  CHECK(continuant_determinant({3, Parity::odd}, 3) ==
        RationalPoly::from_integers({0, -72, 0, 48}));
  // odd N = 2: a_3 = D_2 / 12 = (2d^2 - 1)/3
  CHECK(coefficients_by_determinant({2, Parity::odd}, 2) ==
        make_rational(1, 3) * RationalPoly::from_integers({-1, 0, 2}));
  // even N = 2: a_3 = -D_3 / 12 = (5d - 2d^3)/3
  CHECK(coefficients_by_determinant({2, Parity::even}, 3) ==
        make_rational(1, 3) * RationalPoly::from_integers({0, 5, 0, -2}));
  // D_0 = 1 by the empty-block convention
  CHECK(continuant_determinant({5, Parity::odd}, 0) == RationalPoly::constant(Rational(1)));
}

TEST_CASE("condition polynomial and its degenerate cases") {
  CHECK(condition_polynomial({2, Parity::even}) == RationalPoly::from_integers({0, -20, 0, 8}));
  CHECK(condition_polynomial({0, Parity::even}) == RationalPoly::variable());
  CHECK(condition_polynomial({1, Parity::odd}) == Rational(2) * RationalPoly::variable());
  CHECK(condition_polynomial({0, Parity::odd}) == RationalPoly::constant(Rational(1)));
  // proportional to the extended coefficient for every family
  for (int N = 0; N <= 12; ++N)
    for (Parity parity : {Parity::even, Parity::odd})
      CHECK(proportional(condition_polynomial({N, parity}), extended_coefficient({N, parity})));
}

TEST_CASE("condition polynomial is proportional to the last open row") {
  const RationalPoly d = RationalPoly::variable();
  for (int N = 1; N <= 12; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      auto table = coefficients_by_recurrence({N, parity});
      RationalPoly row = make_rational(2) * table.a[static_cast<size_t>(N) - 1] +
                         make_rational(2L * N) * (d * table.a[static_cast<size_t>(N)]);
      RationalPoly cond = condition_polynomial({N, parity});
      if (parity == Parity::odd && N == 1) {
        // row is 2*a_0 + 2d*a_1 = 2d
        CHECK(row == Rational(2) * d);
      }
      CHECK(proportional(row, cond));
    }
  }
}

TEST_CASE("reduced condition matches the frozen reference rows") {
  struct Row {
    int N;
    Parity parity;
    std::vector<long> coeffs;
    int stripped;
  };
  const Row rows[] = {
      {2, Parity::even, {-5, 0, 2}, 1},
      {3, Parity::even, {3, 0, -9, 0, 2}, 0},
      {4, Parity::even, {27, 0, -28, 0, 4}, 1},
      {5, Parity::even, {-15, 0, 75, 0, -40, 0, 4}, 0},
      {2, Parity::odd, {-1, 0, 2}, 0},
      {3, Parity::odd, {-3, 0, 2}, 1},
      {4, Parity::odd, {3, 0, -12, 0, 4}, 0},
      {5, Parity::odd, {15, 0, -20, 0, 4}, 1},
  };
  for (const auto& row : rows) {
    auto rc = reduced_condition({row.N, row.parity});
    CHECK(rc.poly == RationalPoly::from_integers(row.coeffs));
    CHECK(rc.stripped_power == row.stripped);
  }
}

TEST_CASE("reduced condition survives only even powers") {
  for (int N = 0; N <= 12; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      auto rc = reduced_condition({N, parity});
      CHECK(rc.poly.leading() > 0);
      CHECK(rc.poly == rc.poly.negate_variable());
      CHECK(rc.poly.coeff(0) != 0);
      // content already stripped
      auto cs = content_split(rc.poly);
      CHECK(cs.content == 1);
    }
  }
}

TEST_CASE("coefficient tables obey the d -> -d mirror") {
  for (int N = 0; N <= 10; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      auto table = coefficients_by_recurrence({N, parity});
      const int offset = parity == Parity::even ? 0 : 1;
      for (int n = 0; n <= N; ++n) {
        const RationalPoly& a = table.a[static_cast<size_t>(n)];
        RationalPoly mirrored = a.negate_variable();
        if ((n + offset) % 2 == 0) {
          CHECK(mirrored == a);
        } else {
          CHECK(mirrored == -a);
        }
      }
    }
  }
}

TEST_CASE("solve: shallow families with exact rational shifts") {
  auto sols = solve({1, Parity::even}, 12);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].d_value == -1);
  CHECK(sols[1].d_value == 1);
  CHECK(sols[0].energy == 3);
  CHECK(sols[0].well_type == WellType::single_well);
  CHECK(sols[1].well_type == WellType::double_well);
  REQUIRE(sols[0].coefficients.size() == 2);
  CHECK(sols[0].coefficients[0] == 1.0);
  CHECK(sols[0].coefficients[1] == 1.0);  // a_1 = -d = 1
  CHECK(sols[1].coefficients[1] == -1.0);
}

TEST_CASE("solve: families with no admissible shift") {
  CHECK(solve({0, Parity::even}, 12).empty());
  CHECK(solve({0, Parity::odd}, 12).empty());
  CHECK(solve({1, Parity::odd}, 12).empty());
  CHECK_THROWS_AS(solve({2, Parity::even}, 0), std::invalid_argument);
}

TEST_CASE("solve: frozen shifts for the first nontrivial families") {
  auto even2 = solve({2, Parity::even}, 12);
  REQUIRE(even2.size() == 2);
  CHECK(std::abs(even2[0].d_value.get_d() + kSqrt5Over2) < 1e-12);
  CHECK(std::abs(even2[1].d_value.get_d() - kSqrt5Over2) < 1e-12);
  CHECK(std::abs(even2[1].coefficients[2] - 0.5) < 1e-11);  // a_2 = d^2 - 2 = 1/2
  CHECK(even2[0].energy == 5);

  auto odd2 = solve({2, Parity::odd}, 12);
  REQUIRE(odd2.size() == 2);
  CHECK(std::abs(odd2[0].d_value.get_d() + kSqrt1Over2) < 1e-12);
  CHECK(std::abs(odd2[1].d_value.get_d() - kSqrt1Over2) < 1e-12);
  // a_2 = -d
  CHECK(std::abs(odd2[1].coefficients[2] + odd2[1].d_value.get_d()) < 1e-15);

  auto even3 = solve({3, Parity::even}, 12);
  REQUIRE(even3.size() == 4);
  const double quad[4] = {-kQuartPlus, -kQuartMinus, kQuartMinus, kQuartPlus};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(even3[static_cast<size_t>(i)].d_value.get_d() - quad[i]) < 1e-12);
  CHECK(even3[0].energy == 7);

  auto odd3 = solve({3, Parity::odd}, 12);
  REQUIRE(odd3.size() == 2);
  CHECK(std::abs(odd3[1].d_value.get_d() - kSqrt3Over2) < 1e-12);
  // a_3 = (2d^2 - 2)/3 = 1/3 at both shifts
  CHECK(std::abs(odd3[0].coefficients[3] - 1.0 / 3.0) < 1e-11);
  CHECK(std::abs(odd3[1].coefficients[3] - 1.0 / 3.0) < 1e-11);
}

TEST_CASE("solve: ordering, brackets, and the residual bound") {
  for (int N = 1; N <= 8; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      QESProblem prob{N, parity};
      auto rc = reduced_condition(prob);
      Rational coeff_sum(0);
      for (const auto& c : rc.poly.coeffs()) coeff_sum += abs(c);
      auto sols = solve(prob, 12);
      for (size_t i = 0; i < sols.size(); ++i) {
        const auto& s = sols[i];
        CHECK(s.digits == 12);
        CHECK(s.energy == 2 * N + 1);
        // bracket holds the value and never straddles zero
        CHECK(s.d_bracket.lo <= s.d_value);
        CHECK(s.d_value <= s.d_bracket.hi);
        CHECK(!(s.d_bracket.lo < 0 && 0 < s.d_bracket.hi));
        CHECK(s.well_type ==
              (sign(s.d_value) < 0 ? WellType::single_well : WellType::double_well));
        if (i + 1 < sols.size()) CHECK(s.d_value < sols[i + 1].d_value);
        // documented bound, one order looser than the solver's internal cap
        CHECK(Rational(abs(rc.poly(s.d_value))) < pow10(1 - 12) * coeff_sum);
        CHECK(Rational(abs(rc.poly(s.d_value))) <= pow10(-12) * coeff_sum);
      }
      // shifts come in mirror pairs
      for (size_t i = 0; i < sols.size(); ++i) {
        double di = sols[i].d_value.get_d();
        double dj = sols[sols.size() - 1 - i].d_value.get_d();
        CHECK(std::abs(di + dj) < 2e-12);
      }
    }
  }
}

TEST_CASE("solve is deterministic") {
  auto a = solve({5, Parity::even}, 14);
  auto b = solve({5, Parity::even}, 14);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].d_value == b[i].d_value);
    CHECK(a[i].d_bracket.lo == b[i].d_bracket.lo);
    CHECK(a[i].d_bracket.hi == b[i].d_bracket.hi);
  }
}

TEST_CASE("ode_residual vanishes identically except at the open row") {
  for (int N = 0; N <= 10; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      QESProblem prob{N, parity};
      auto r = ode_residual(prob);
      REQUIRE(r.size() == static_cast<size_t>(N) + 1);
      for (int n = 0; n <= N; ++n) {
        if (n == N - 1) continue;
        CHECK(r[static_cast<size_t>(n)].is_zero());
      }
      if (N >= 1) CHECK(proportional(r[static_cast<size_t>(N) - 1], condition_polynomial(prob)));
    }
  }
}

TEST_CASE("ode_residual spot value for the first even pair family") {
  auto r = ode_residual({2, Parity::even});
  REQUIRE(r.size() == 3);
  CHECK(r[0].is_zero());
  CHECK(r[2].is_zero());
  CHECK(r[1] == RationalPoly::from_integers({0, 10, 0, -4}));
}

TEST_CASE("residual row is numerically dead at every refined shift") {
  for (int N = 1; N <= 8; ++N) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      QESProblem prob{N, parity};
      auto r = ode_residual(prob);
      const RationalPoly& open_row = r[static_cast<size_t>(N) - 1];
      for (const auto& sol : solve(prob, 12)) {
        double scale = 0;
        const double ad = std::abs(sol.d_value.get_d());
        double power = 1;
        for (int k = 0; k <= *open_row.degree(); ++k) {
          scale += std::abs(open_row.coeff(k).get_d()) * std::max(1.0, power);
          power *= ad;
        }
        const double value = std::abs(Rational(open_row(sol.d_value)).get_d());
        CHECK(value < 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("elimination relations from the reference tables hold at the shifts") {
  // Each relation reads s(v) + c * a_k = 0, with v = d for the even family
  // and v = a_2 = -d for the odd one.
  struct Relation {
    int N;
    Parity parity;
    std::vector<long> s;  // ascending coefficients of s(v)
    int k;
    long c;
  };
  const Relation relations[] = {
      {2, Parity::even, {-1}, 2, 2},
      {3, Parity::even, {0, -8, 0, 2}, 3, 3},
      {4, Parity::even, {11, 0, -2}, 4, 12},
      {5, Parity::even, {0, 29, 0, -19, 0, 2}, 5, 15},
      {2, Parity::odd, {0, -1}, 2, 1},
      {3, Parity::odd, {-1}, 3, 3},
      {4, Parity::odd, {0, 5, 0, -2}, 4, 6},
      {5, Parity::odd, {7, 0, -2}, 5, 30},
  };
  for (const auto& rel : relations) {
    QESProblem prob{rel.N, rel.parity};
    auto table = coefficients_by_recurrence(prob);
    for (const auto& sol : solve(prob, 12)) {
      const Rational v =
          rel.parity == Parity::even ? sol.d_value : Rational(-sol.d_value);
      const RationalPoly s = RationalPoly::from_integers(rel.s);
      Rational value = s(v) + Rational(rel.c) * table.a[static_cast<size_t>(rel.k)](sol.d_value);
      CHECK(std::abs(value.get_d()) < 1e-9);
    }
  }
}

TEST_CASE("third even coefficient at N=3 resolves to (8d - 2d^3)/3") {
  // The three routes (recurrence, determinants, elimination) agree on the
  // closed form -2d/(6d^2-3) at admissible shifts; the sign-flipped
  // variant fails the recurrence.
  QESProblem prob{3, Parity::even};
  auto table = coefficients_by_recurrence(prob);
  for (const auto& sol : solve(prob, 12)) {
    const double d = sol.d_value.get_d();
    const double from_table = table.a[3](sol.d_value).get_d();
    const double resolved = -2.0 * d / (6.0 * d * d - 3.0);
    const double rejected = +2.0 * d / (6.0 * d * d - 3.0);
    CHECK(std::abs(from_table - resolved) < 1e-10);
    CHECK(std::abs(from_table - rejected) > 1e-2);
  }
}
