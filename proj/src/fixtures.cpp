#include "pqv/fixtures.hpp"

#include <numeric>

#include "pqv/errors.hpp"

namespace pqv::fixtures {

namespace {

Cyclotomic q(std::int64_t v) { return Cyclotomic(make_rational(v)); }

MarkedOrbit orbit(std::string label, std::vector<Cyclotomic> rep, std::vector<std::int64_t> stab, std::int64_t stab_order,
                  std::int64_t rotation, std::int64_t size, std::vector<int> orders) {
  MarkedOrbit o;
  o.label = std::move(label);
  o.representative = std::move(rep);
  o.stabilizer = GroupElement{std::move(stab)};
  o.stabilizer_order = stab_order;
  o.rotation = rotation;
  o.orbit_size = size;
  o.multiplicity = 1;
  o.vanishing_orders = std::move(orders);
  return o;
}

// y^2 = f(x0, x1) in P(1,1,w)
WeightedCurve hyperelliptic(int w, int genus, int kappa, const std::vector<std::pair<Exponents, std::int64_t>>& rhs) {
  WeightedCurve c;
  c.generators = {"x0", "x1", "y"};
  c.weights = {1, 1, w};
  c.equation.push_back({q(1), {0, 0, 2}});
  for (const auto& [e, coeff] : rhs) c.equation.push_back({q(-coeff), {e[0], e[1], 0}});
  c.genus = genus;
  c.canonical_degree = kappa;
  c.max_exponents = {-1, -1, 1};
  return c;
}

}  // namespace

ProductQuotientModel z6_cy3() {
  const AbelianGroup G({6});
  CurveFactor f;
  f.curve = hyperelliptic(3, 2, 1, {{{6, 0}, 1}, {{0, 6}, 1}});
  f.action = ActionSpec{G, {1}, {{1}, {2}, {3}}, 6, {{0, 1, 0}}};
  f.orbits = {
      orbit("p0", {q(1), q(0), q(1)}, {1}, 6, 1, 1, {0, 1, 0}),
      orbit("p1", {q(1), q(0), q(-1)}, {1}, 6, 1, 1, {0, 1, 0}),
      orbit("p2", {q(0), q(1), q(1)}, {2}, 3, 2, 2, {1, 0, 0}),
  };
  ProductQuotientModel pq;
  pq.name = "z6_cy3";
  pq.group = G;
  pq.factors = {f, f, f};
  pq.exactness = ExactnessAttestation{true, {}, "invariant monomials generate the twisted pluricanonical spaces in every degree"};
  return pq;
}

ProductQuotientModel z8_fake_cy() {
  const AbelianGroup G({8});
  CurveFactor c2;
  c2.curve = hyperelliptic(3, 2, 1, {{{5, 1}, 1}, {{1, 5}, 1}});
  c2.action = ActionSpec{G, {2}, {{2}, {6}, {8}}, 8, {{0, 2, 1}}};
  c2.orbits = {
      orbit("q0", {q(0), q(1), q(0)}, {1}, 8, 3, 1, {2, 0, 1}),
      orbit("q1", {q(1), q(0), q(0)}, {1}, 8, 1, 1, {0, 2, 1}),
      orbit("p", {q(1), Cyclotomic::zeta(8, 1), q(0)}, {4}, 2, 1, 4, {0, 0, 1}),
  };
  CurveFactor c3;
  c3.curve = hyperelliptic(4, 3, 2, {{{8, 0}, 1}, {{0, 8}, 1}});
  c3.action = ActionSpec{G, {2}, {{1}, {3}, {4}}, 8, {{0, 1, 0}}};
  c3.orbits = {
      orbit("s1", {q(1), q(0), q(1)}, {1}, 8, 1, 1, {0, 1, 0}),
      orbit("s2", {q(1), q(0), q(-1)}, {1}, 8, 1, 1, {0, 1, 0}),
      orbit("s3", {q(0), q(1), q(1)}, {2}, 4, 3, 2, {1, 0, 0}),
  };
  ProductQuotientModel pq;
  pq.name = "z8_fake_cy";
  pq.group = G;
  pq.factors = {c2, c2, c3};
  return pq;
}

ProductQuotientModel fermat(int a, int b) {
  const std::int64_t n = static_cast<std::int64_t>(a) * b;
  if (b < 3 || n < 4 || std::gcd(n, mod(1 - static_cast<std::int64_t>(b) * b, n)) != 1)
    throw UsageError("Fermat family needs b >= 3, ab >= 4 and gcd(ab, 1 - b^2) = 1");
  const AbelianGroup G({n, n});
  const std::int64_t lift = n - 3;

  WeightedCurve c;
  c.generators = {"x0", "x1", "x2"};
  c.weights = {1, 1, 1};
  c.equation = {{q(1), {static_cast<int>(n), 0, 0}}, {q(1), {0, static_cast<int>(n), 0}}, {q(1), {0, 0, static_cast<int>(n)}}};
  c.genus = static_cast<int>((n - 1) * (n - 2) / 2);
  c.canonical_degree = static_cast<int>(n - 3);
  c.max_exponents = {-1, -1, static_cast<int>(n - 1)};

  // g1 and h1 multiply x1, resp. x2, by omega; on sections g1 acts on a
  // degree n-3 monomial by omega^(-m1-1) and h1 by omega^(-m2-1).
  ActionSpec geometric{G, {lift, lift}, {{-1, -1}, {-1 - lift, -1}, {-1, -1 - lift}}, static_cast<int>(n), {{0, 1, 0}, {0, 0, 1}}};
  for (auto& row : geometric.section_weights)
    for (auto& w : row) w = mod(w, lift * n);

  const Cyclotomic root = Cyclotomic::zeta(static_cast<int>(2 * n), 1);  // root^n = -1
  CurveFactor f1;
  f1.curve = c;
  f1.action = geometric;
  f1.orbits = {
      orbit("Fix(g1)", {q(1), q(0), root}, {1, 0}, n, 1, n, {0, 1, 0}),
      orbit("Fix(h1)", {q(1), root, q(0)}, {0, 1}, n, 1, n, {0, 0, 1}),
      orbit("Fix(k1)", {q(0), q(1), root}, {mod(-1, n), mod(-1, n)}, n, 1, n, {1, 0, 0}),
  };

  const auto change = basis_change(n, {{1, b}, {-b, -1}});
  CurveFactor f2;
  f2.curve = c;
  f2.action = reindex_action(geometric, change);
  f2.orbits = {
      orbit("Fix(g2)", {q(1), q(0), root}, {1, mod(b, n)}, n, 1, n, {0, 1, 0}),
      orbit("Fix(h2)", {q(1), root, q(0)}, {mod(-b, n), mod(-1, n)}, n, 1, n, {0, 0, 1}),
      orbit("Fix(k2)", {q(0), q(1), root}, {mod(b - 1, n), mod(1 - b, n)}, n, 1, n, {1, 0, 0}),
  };

  ProductQuotientModel pq;
  pq.name = "fermat_a" + std::to_string(a) + "_b" + std::to_string(b);
  pq.group = G;
  pq.factors = {f1, f2};
  if (a == b) pq.exactness = ExactnessAttestation{false, {2}, "invariant monomials generate the bicanonical sections vanishing on the noncanonical points (a = b)"};
  return pq;
}

}  // namespace pqv::fixtures
