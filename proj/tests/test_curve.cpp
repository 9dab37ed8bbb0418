#include <doctest.h>

#include <random>

#include "pqv/curve.hpp"
#include "pqv/errors.hpp"
#include "pqv/fixtures.hpp"

using namespace pqv;

namespace {

std::int64_t evaluate(const Character& c, const GroupElement& g, const AbelianGroup& G) {
  // value as an exponent of zeta_{exponent of G}; here all groups are (Z_n)^r
  std::int64_t s = 0;
  for (std::size_t j = 0; j < c.weights.size(); ++j) s += c.weights[j] * g.exps[j];
  return mod(s, G.orders()[0]);
}

}  // namespace

TEST_CASE("canonical monomials: genus and Riemann-Roch dimensions (2d-1)(g-1)") {
  std::vector<CurveFactor> curves{fixtures::z6_cy3().factors[0], fixtures::z8_fake_cy().factors[0],
                                  fixtures::z8_fake_cy().factors[2], fixtures::fermat(3, 3).factors[0],
                                  fixtures::fermat(4, 4).factors[0]};
  for (const auto& f : curves) {
    const auto& c = f.curve;
    CHECK(static_cast<int>(canonical_monomials(c, 1).size()) == c.genus);
    CHECK(canonical_monomials(c, 0).size() == 1);
    const int top = c.genus > 50 ? 3 : 6;
    for (int d = 2; d <= top; ++d)
      CHECK(static_cast<std::int64_t>(canonical_monomials(c, d).size()) == static_cast<std::int64_t>(2 * d - 1) * (c.genus - 1));
  }
  // degree n-3 = 6 monomials of the Fermat curve of degree 9
  const auto f9 = fixtures::fermat(3, 3).factors[0].curve;
  const auto m = canonical_monomials(f9, 1);
  CHECK(m.size() == 28);
  CHECK(std::is_sorted(m.begin(), m.end()));
  for (const auto& a : m) CHECK(a[0] + a[1] + a[2] == 6);
}

TEST_CASE("characters of the Z6 and Z8 actions on canonical rings") {
  const auto z6 = fixtures::z6_cy3().factors[0].action;
  CHECK(monomial_character(z6, std::vector<int>{1, 0, 0}).weights == std::vector<std::int64_t>{1});
  CHECK(monomial_character(z6, std::vector<int>{0, 1, 0}).weights == std::vector<std::int64_t>{2});
  CHECK(monomial_character(z6, std::vector<int>{0, 0, 1}).weights == std::vector<std::int64_t>{3});
  const auto z8 = fixtures::z8_fake_cy();
  const auto& c2 = z8.factors[0].action;
  const auto& c3 = z8.factors[2].action;
  // eta^2 = omega: x0 -> eta^2, x1 -> eta^6 on C2; x0 -> eta, x1 -> eta^3, y -> eta^4 on C3
  CHECK(monomial_character(c2, std::vector<int>{1, 0, 0}).weights == std::vector<std::int64_t>{1});
  CHECK(monomial_character(c2, std::vector<int>{0, 1, 0}).weights == std::vector<std::int64_t>{3});
  CHECK(monomial_character(c3, std::vector<int>{2, 0, 0}).weights == std::vector<std::int64_t>{1});
  CHECK(monomial_character(c3, std::vector<int>{0, 0, 1}).weights == std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(monomial_character(c3, std::vector<int>{1, 0, 0}), ValidationError);
  // three known bicanonical monomials are invariant
  const std::vector<std::vector<Exponents>> known{
      {{0, 2, 0}, {0, 2, 0}, {2, 2, 0}}, {{1, 1, 0}, {0, 2, 0}, {0, 4, 0}}, {{0, 2, 0}, {1, 1, 0}, {0, 4, 0}}};
  for (const auto& p : known) {
    Character total = z8.group.trivial_character();
    for (std::size_t i = 0; i < 3; ++i) total = z8.group.add(total, monomial_character(z8.factors[i].action, p[i]));
    CHECK(total.is_trivial());
  }
}

TEST_CASE("Fermat action on canonical monomials: g1 by omega^(-m1-1), h1 by omega^(-m2-1)") {
  for (int b : {3, 4}) {
    const auto pq = fixtures::fermat(b, b);
    const std::int64_t n = b * b;
    for (const auto& a : canonical_monomials(pq.factors[0].curve, 1)) {
      const auto c = monomial_character(pq.factors[0].action, a);
      CHECK(c.weights[0] == mod(-a[1] - 1, n));
      CHECK(c.weights[1] == mod(-a[2] - 1, n));
      // second factor: g2 = g1 h1^b acts like g1 does on the first factor
      const auto c2 = monomial_character(pq.factors[1].action, a);
      CHECK(evaluate(c2, GroupElement{{1, b}}, pq.group) == c.weights[0]);
      CHECK(evaluate(c2, GroupElement{{mod(-b, n), mod(-1, n)}}, pq.group) == c.weights[1]);
    }
  }
}

TEST_CASE("basis change inverse modulo n") {
  const auto bc = basis_change(16, {{1, 4}, {-4, -1}});
  CHECK(bc.det == 15);
  CHECK(bc.det_inverse == 15);
  // e = (1 - b^2)^{-1} mod n = 1 for b = 4: g1 = g2^e h2^{eb}, h1 = g2^{-eb} h2^{-e}
  CHECK(bc.old_in_new(0, 0) == 1);
  CHECK(bc.old_in_new(0, 1) == 4);
  CHECK(bc.old_in_new(1, 0) == 12);
  CHECK(bc.old_in_new(1, 1) == 15);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 2 + trial % 30;
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 61) - 30;
    try {
      const auto b = basis_change(n, m);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < r; ++k)
            s += b.old_in_new(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) *
                 b.new_in_old(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
          CHECK(mod(s, n) == (i == j ? 1 : 0));
        }
    } catch (const ValidationError&) {
      // singular mod n: the determinant shares a factor with n
    }
  }
  CHECK_THROWS_AS(basis_change(6, {{2, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("every fixture orbit validates and reproduces its vanishing orders") {
  std::vector<ProductQuotientModel> models{fixtures::z6_cy3(), fixtures::z8_fake_cy(), fixtures::fermat(3, 3),
                                           fixtures::fermat(4, 4)};
  for (const auto& pq : models)
    for (const auto& f : pq.factors)
      for (const auto& o : f.orbits) {
        const auto v = validate_marked_orbit(f.curve, f.action, o);
        INFO(pq.name << " " << o.label << (v.problems.empty() ? "" : " " + v.problems.front()));
        CHECK(v.ok);
        CHECK(v.computed_orders == o.vanishing_orders);
      }
}

TEST_CASE("series expansion at q1 on y^2 = x0 x1 (x0^4 + x1^4): u = v^2 - v^10 + ...") {
  const auto f = fixtures::z8_fake_cy().factors[0];
  const auto v = validate_marked_orbit(f.curve, f.action, f.orbits[1]);
  REQUIRE(v.ok);
  CHECK(v.parameter == 2);
  CHECK(v.series[0].is_zero());
  CHECK(v.series[1] == Cyclotomic(make_rational(1)));
  CHECK(v.series[2].is_zero());
}

TEST_CASE("corrupted orbit data is rejected with a reason") {
  const auto f = fixtures::z6_cy3().factors[0];
  auto bad = f.orbits[0];
  bad.rotation = 5;
  CHECK_FALSE(validate_marked_orbit(f.curve, f.action, bad).ok);
  bad = f.orbits[0];
  bad.vanishing_orders = {0, 2, 0};
  CHECK_FALSE(validate_marked_orbit(f.curve, f.action, bad).ok);
  bad = f.orbits[0];
  bad.representative = {Cyclotomic(make_rational(1)), Cyclotomic(make_rational(0)), Cyclotomic(make_rational(2))};
  CHECK_FALSE(validate_marked_orbit(f.curve, f.action, bad).ok);
  bad = f.orbits[2];
  bad.stabilizer = GroupElement{{1}};
  bad.stabilizer_order = 6;
  CHECK_FALSE(validate_marked_orbit(f.curve, f.action, bad).ok);
  bad = f.orbits[2];
  bad.orbit_size = 3;
  const auto v = validate_marked_orbit(f.curve, f.action, bad);
  CHECK_FALSE(v.ok);
  CHECK(!v.problems.empty());
}

TEST_CASE("section and point actions use one convention per model") {
  CHECK(section_point_sign(fixtures::z6_cy3().factors[0].curve, fixtures::z6_cy3().factors[0].action) == 1);
  const auto z8 = fixtures::z8_fake_cy();
  for (const auto& f : z8.factors) CHECK(section_point_sign(f.curve, f.action) == 1);
  const auto fe = fixtures::fermat(4, 4);
  for (const auto& f : fe.factors) CHECK(section_point_sign(f.curve, f.action) == -1);
}

TEST_CASE("structural checks on curves and actions") {
  auto f = fixtures::z6_cy3().factors[0];
  CHECK_NOTHROW(check_curve_action(f.curve, f.action));
  auto c = f.curve;
  c.genus = 3;
  CHECK_THROWS_AS(check_curve_action(c, f.action), ValidationError);
  c = f.curve;
  c.equation[1].exps = {5, 0, 0};
  CHECK_THROWS_AS(check_curve_action(c, f.action), ValidationError);
  auto a = f.action;
  a.section_weights[2] = {1};
  CHECK_THROWS_AS(check_curve_action(f.curve, a), ValidationError);
  CHECK(acts_trivially(f.curve, f.action, GroupElement{{0}}));
  CHECK_FALSE(acts_trivially(f.curve, f.action, GroupElement{{3}}));
}
