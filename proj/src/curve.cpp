#include "pqv/curve.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "pqv/errors.hpp"

namespace pqv {

namespace {

void enumerate_monomials(const WeightedCurve& curve, std::size_t i, int remaining, Exponents& cur,
                         std::vector<Exponents>& out) {
  const std::size_t n = curve.weights.size();
  if (i + 1 == n) {
    const int w = curve.weights[i];
    if (remaining % w != 0) return;
    const int e = remaining / w;
    if (curve.max_exponents[i] >= 0 && e > curve.max_exponents[i]) return;
    cur[i] = e;
    out.push_back(cur);
    return;
  }
  int top = remaining / curve.weights[i];
  if (curve.max_exponents[i] >= 0) top = std::min(top, curve.max_exponents[i]);
  // Descending so that the output is lexicographically decreasing; reversed below.
  for (int e = top; e >= 0; --e) {
    cur[i] = e;
    enumerate_monomials(curve, i + 1, remaining - e * curve.weights[i], cur, out);
  }
  cur[i] = 0;
}

Cyclotomic evaluate(const WeightedCurve& curve, std::span<const Cyclotomic> point) {
  Cyclotomic value(1);
  for (const auto& term : curve.equation) {
    Cyclotomic t = term.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (term.exps[i] != 0) t *= point[i].pow(term.exps[i]);
    value += t;
  }
  return value;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t determinant(const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& a, std::int64_t n) {
  const Eigen::Index r = a.rows();
  if (r == 1) return mod(a(0, 0), n);
  std::int64_t det = 0;
  for (Eigen::Index c = 0; c < r; ++c) {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> minor(r - 1, r - 1);
    for (Eigen::Index i = 1; i < r; ++i)
      for (Eigen::Index j = 0, k = 0; j < r; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    const std::int64_t term = mod(a(0, c) * determinant(minor, n), n);
    det = mod(det + ((c % 2 == 0) ? term : -term), n);
  }
  return det;
}

}  // namespace

std::vector<Exponents> canonical_monomials(const WeightedCurve& curve, int d) {
  if (d < 0) throw UsageError("pluricanonical degree must be non-negative");
  if (curve.weights.empty() || curve.max_exponents.size() != curve.weights.size())
    throw UsageError("curve weights and exponent bounds must be non-empty and of equal length");
  std::vector<Exponents> out;
  Exponents cur(curve.weights.size(), 0);
  enumerate_monomials(curve, 0, curve.canonical_degree * d, cur, out);
  std::reverse(out.begin(), out.end());
  return out;
}

Character monomial_character(const ActionSpec& action, std::span<const int> alpha) {
  const auto& orders = action.group.orders();
  if (alpha.size() != action.section_weights.size())
    throw UsageError("monomial length does not match the number of ring generators");
  Character c;
  c.weights.resize(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const std::int64_t lift = action.section_lift[j];
    const std::int64_t big = lift * orders[j];
    std::int64_t s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) s = mod(s + alpha[i] * action.section_weights[i][j], big);
    if (s % lift != 0) {
      std::ostringstream msg;
      msg << "monomial character not divisible by the lift " << lift << " for generator " << j;
      throw ValidationError(msg.str());
    }
    c.weights[j] = s / lift;
  }
  return c;
}

std::vector<std::int64_t> point_action(const ActionSpec& action, const GroupElement& g) {
  const std::size_t coords = action.point_exponents.empty() ? 0 : action.point_exponents[0].size();
  std::vector<std::int64_t> e(coords, 0);
  for (std::size_t j = 0; j < g.exps.size(); ++j)
    for (std::size_t i = 0; i < coords; ++i)
      e[i] = mod(e[i] + g.exps[j] * action.point_exponents[j][i], action.point_conductor);
  return e;
}

bool acts_trivially(const WeightedCurve& curve, const ActionSpec& action, const GroupElement& g) {
  const auto e = point_action(action, g);
  const auto it = std::find(curve.weights.begin(), curve.weights.end(), 1);
  if (it == curve.weights.end()) throw ValidationError("triviality test needs a generator of weight 1");
  const std::int64_t t = e[static_cast<std::size_t>(it - curve.weights.begin())];
  for (std::size_t i = 0; i < e.size(); ++i)
    if (mod(e[i] - curve.weights[i] * t, action.point_conductor) != 0) return false;
  return true;
}

void check_curve_action(const WeightedCurve& curve, const ActionSpec& action) {
  const std::size_t n = curve.weights.size();
  const std::size_t r = action.group.rank();
  if (curve.generators.size() != n || curve.max_exponents.size() != n)
    throw ValidationError("curve generator names, weights and exponent bounds differ in length");
  for (int w : curve.weights)
    if (w < 1) throw ValidationError("generator weights must be positive");
  if (curve.canonical_degree < 1) throw ValidationError("canonical degree must be positive");
  if (curve.equation.empty()) throw ValidationError("curve equation has no terms");
  int degree = -1;
  for (const auto& term : curve.equation) {
    if (term.exps.size() != n) throw ValidationError("equation term has the wrong number of exponents");
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += term.exps[i] * curve.weights[i];
    if (degree >= 0 && deg != degree) throw ValidationError("curve equation is not weighted homogeneous");
    degree = deg;
  }
  if (action.section_lift.size() != r || action.section_weights.size() != n)
    throw ValidationError("section action has the wrong shape");
  for (const auto& row : action.section_weights)
    if (row.size() != r) throw ValidationError("section action has the wrong shape");
  for (auto l : action.section_lift)
    if (l < 1) throw ValidationError("section lifts must be positive");
  if (action.point_conductor < 1 || action.point_exponents.size() != r)
    throw ValidationError("point action has the wrong shape");
  for (const auto& row : action.point_exponents)
    if (row.size() != n) throw ValidationError("point action has the wrong shape");

  // The equation must be semi-invariant under the lifted section action.
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t big = action.section_lift[j] * action.group.orders()[j];
    std::optional<std::int64_t> chi;
    for (const auto& term : curve.equation) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s = mod(s + term.exps[i] * action.section_weights[i][j], big);
      if (chi && *chi != s) throw ValidationError("curve equation is not semi-invariant under generator " + std::to_string(j));
      chi = s;
    }
  }
  const auto basis = canonical_monomials(curve, 1);
  if (static_cast<int>(basis.size()) != curve.genus) {
    std::ostringstream msg;
    msg << "canonical monomial count " << basis.size() << " differs from the genus " << curve.genus;
    throw ValidationError(msg.str());
  }
  for (const auto& a : basis) (void)monomial_character(action, a);
}

int section_point_sign(const WeightedCurve& curve, const ActionSpec& action) {
  const auto it = std::find(curve.weights.begin(), curve.weights.end(), 1);
  if (it == curve.weights.end()) throw ValidationError("sign check needs a generator of weight 1");
  const auto c = static_cast<std::size_t>(it - curve.weights.begin());
  bool plus = true, minus = true;
  const std::int64_t P = action.point_conductor;
  for (std::size_t j = 0; j < action.group.rank(); ++j) {
    const std::int64_t big = action.section_lift[j] * action.group.orders()[j];
    for (std::size_t i = 0; i < curve.weights.size(); ++i) {
      const std::int64_t sec = mod(action.section_weights[i][j] - curve.weights[i] * action.section_weights[c][j], big);
      const std::int64_t pt = mod(action.point_exponents[j][i] - curve.weights[i] * action.point_exponents[j][c], P);
      // sec/big == +-pt/P modulo 1
      const std::int64_t l = std::lcm(big, P);
      const std::int64_t x = sec * (l / big), y = pt * (l / P);
      if (mod(x - y, l) != 0) plus = false;
      if (mod(x + y, l) != 0) minus = false;
    }
  }
  if (plus && minus) return 2;
  if (plus) return 1;
  if (minus) return -1;
  return 0;
}

BasisChange basis_change(std::int64_t n, const std::vector<std::vector<std::int64_t>>& new_in_old) {
  const auto r = static_cast<Eigen::Index>(new_in_old.size());
  if (r == 0 || n < 2) throw UsageError("basis change needs a nonempty matrix and n >= 2");
  BasisChange bc;
  bc.n = n;
  bc.new_in_old.resize(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(new_in_old[static_cast<std::size_t>(i)].size()) != r)
      throw UsageError("basis change matrix must be square");
    for (Eigen::Index j = 0; j < r; ++j) bc.new_in_old(i, j) = mod(new_in_old[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], n);
  }
  bc.det = determinant(bc.new_in_old, n);
  bc.det_inverse = inverse_mod(bc.det, n);
  if (bc.det_inverse == 0 && n != 1) throw ValidationError("basis change matrix is not invertible mod " + std::to_string(n));
  // Adjugate times det^{-1}.
  bc.old_in_new.resize(r, r);
  if (r == 1) {
    bc.old_in_new(0, 0) = bc.det_inverse;
  } else {
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j) {
        Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> minor(r - 1, r - 1);
        for (Eigen::Index a = 0, ma = 0; a < r; ++a) {
          if (a == j) continue;
          for (Eigen::Index b = 0, mb = 0; b < r; ++b)
            if (b != i) minor(ma, mb++) = bc.new_in_old(a, b);
          ++ma;
        }
        std::int64_t cof = determinant(minor, n);
        if ((i + j) % 2 == 1) cof = mod(-cof, n);
        bc.old_in_new(i, j) = mod(cof * bc.det_inverse, n);
      }
  }
  return bc;
}

ActionSpec reindex_action(const ActionSpec& geometric, const BasisChange& change) {
  const std::size_t r = geometric.group.rank();
  if (static_cast<std::size_t>(change.old_in_new.rows()) != r)
    throw UsageError("basis change rank differs from the group rank");
  for (auto o : geometric.group.orders())
    if (o != change.n) throw UsageError("basis change requires a group (Z_n)^r");
  for (std::size_t j = 1; j < r; ++j)
    if (geometric.section_lift[j] != geometric.section_lift[0])
      throw UsageError("basis change requires a common section lift");
  const std::int64_t big = geometric.section_lift[0] * change.n;
  ActionSpec out = geometric;
  for (std::size_t i = 0; i < geometric.section_weights.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s = mod(s + change.old_in_new(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * geometric.section_weights[i][k], big);
      out.section_weights[i][j] = s;
    }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < geometric.point_exponents[j].size(); ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s = mod(s + change.old_in_new(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * geometric.point_exponents[k][i],
                geometric.point_conductor);
      out.point_exponents[j][i] = s;
    }
  return out;
}

OrbitValidation validate_marked_orbit(const WeightedCurve& curve, const ActionSpec& action, const MarkedOrbit& orbit) {
  OrbitValidation v;
  auto fail = [&](const std::string& what) {
    v.ok = false;
    v.problems.push_back(orbit.label + ": " + what);
  };
  const std::size_t n = curve.weights.size();
  if (n != 3) {
    fail("series validation supports plane curves with three generators only");
    return v;
  }
  if (orbit.representative.size() != n || orbit.vanishing_orders.size() != n) {
    fail("representative or vanishing orders have the wrong length");
    return v;
  }
  if (!action.group.contains(orbit.stabilizer)) {
    fail("stabilizer is not an element of the group");
    return v;
  }
  if (std::none_of(orbit.vanishing_orders.begin(), orbit.vanishing_orders.end(), [](int o) { return o > 0; }))
    fail("no ring generator vanishes at the representative");
  if (orbit.stabilizer_order < 2 || std::gcd(orbit.rotation, orbit.stabilizer_order) != 1)
    fail("rotation weight must be a unit modulo a stabilizer order >= 2");
  if (action.group.element_order(orbit.stabilizer) != orbit.stabilizer_order)
    fail("declared stabilizer order " + std::to_string(orbit.stabilizer_order) + " differs from the element order " +
         std::to_string(action.group.element_order(orbit.stabilizer)));
  if (!evaluate(curve, orbit.representative).is_zero()) fail("representative does not satisfy the curve equation");

  std::size_t c = n;
  for (std::size_t i = 0; i < n; ++i)
    if (curve.weights[i] == 1 && !orbit.representative[i].is_zero()) {
      c = i;
      break;
    }
  if (c == n) {
    fail("no weight-1 coordinate is nonzero at the representative");
    return v;
  }
  v.chart = c;
  std::vector<std::size_t> aff;
  for (std::size_t i = 0; i < n; ++i)
    if (i != c) aff.push_back(i);
  std::vector<Cyclotomic> a(n, Cyclotomic(1));
  for (std::size_t i : aff) a[i] = orbit.representative[i] / orbit.representative[c].pow(curve.weights[i]);

  // Full stabilizer of the point: elements whose affine multipliers fix every
  // nonzero affine coordinate.
  const std::int64_t P = action.point_conductor;
  auto affine_multipliers = [&](const GroupElement& g) {
    auto e = point_action(action, g);
    std::vector<std::int64_t> nu(n, 0);
    for (std::size_t i : aff) nu[i] = mod(e[i] - curve.weights[i] * e[c], P);
    return nu;
  };
  std::int64_t stab_size = 0;
  bool gen_fixes = false;
  for (const auto& g : action.group.elements()) {
    const auto nu = affine_multipliers(g);
    bool fixes = true;
    for (std::size_t i : aff)
      if (!a[i].is_zero() && nu[i] != 0) fixes = false;
    if (fixes) ++stab_size;
    if (fixes && g == orbit.stabilizer) gen_fixes = true;
  }
  if (!gen_fixes) fail("stabilizer generator does not fix the representative");
  if (stab_size != orbit.stabilizer_order)
    fail("the point stabilizer has order " + std::to_string(stab_size) + ", declared " + std::to_string(orbit.stabilizer_order));
  if (stab_size * orbit.orbit_size != action.group.order()) fail("orbit size does not match the stabilizer order");

  // Local parameter: an affine coordinate such that the other one can be solved for.
  auto partial = [&](std::size_t var) {
    Cyclotomic d(1);
    for (const auto& term : curve.equation) {
      const int e = term.exps[var];
      if (e == 0) continue;
      Cyclotomic t = term.coeff * Cyclotomic(static_cast<std::int64_t>(e));
      for (std::size_t i : aff) {
        const int ei = i == var ? e - 1 : term.exps[i];
        if (ei != 0) t *= a[i].pow(ei);
      }
      d += t;
    }
    return d;
  };
  std::size_t par = n, sol = n;
  if (!partial(aff[1]).is_zero()) {
    par = aff[0];
    sol = aff[1];
  } else if (!partial(aff[0]).is_zero()) {
    par = aff[1];
    sol = aff[0];
  } else {
    fail("the curve is singular at the representative");
    return v;
  }
  v.parameter = par;

  const int declared_max = *std::max_element(orbit.vanishing_orders.begin(), orbit.vanishing_orders.end());
  const int prec = std::max(declared_max, 1) + 2;
  v.precision = prec;

  // G(t, s) = F(a_par + t, a_sol + s) in the chart, coefficients up to total degree prec.
  std::vector<std::vector<Cyclotomic>> G(static_cast<std::size_t>(prec + 1),
                                         std::vector<Cyclotomic>(static_cast<std::size_t>(prec + 1), Cyclotomic(1)));
  for (const auto& term : curve.equation) {
    const int e1 = term.exps[par], e2 = term.exps[sol];
    for (int p = 0; p <= std::min(e1, prec); ++p)
      for (int q = 0; q <= std::min(e2, prec - p); ++q) {
        Cyclotomic t = term.coeff * Cyclotomic(Rational(binomial(e1, p) * binomial(e2, q)));
        if (e1 - p > 0) t *= a[par].pow(e1 - p);
        if (e2 - q > 0) t *= a[sol].pow(e2 - q);
        G[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] += t;
      }
  }
  const Cyclotomic g01 = G[0][1];
  // s(t) = sum_{k >= 1} s_k t^k; s_k from the t^k coefficient of G(t, s(t)) = 0.
  std::vector<Cyclotomic> s(static_cast<std::size_t>(prec + 1), Cyclotomic(1));
  for (int k = 1; k <= prec; ++k) {
    std::vector<Cyclotomic> spow(static_cast<std::size_t>(prec + 1), Cyclotomic(1));
    spow[0] = Cyclotomic(static_cast<std::int64_t>(1));
    Cyclotomic ck(1);
    for (int q = 0; q <= prec; ++q) {
      if (q > 0) {
        std::vector<Cyclotomic> next(static_cast<std::size_t>(prec + 1), Cyclotomic(1));
        for (int x = 0; x <= prec; ++x) {
          if (spow[static_cast<std::size_t>(x)].is_zero()) continue;
          for (int y = 1; x + y <= prec && y < k; ++y)
            if (!s[static_cast<std::size_t>(y)].is_zero())
              next[static_cast<std::size_t>(x + y)] += spow[static_cast<std::size_t>(x)] * s[static_cast<std::size_t>(y)];
        }
        spow = std::move(next);
      }
      for (int p = 0; p + q <= prec && p <= k; ++p) {
        if (p == 0 && q == 1) continue;
        const auto& gpq = G[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        if (gpq.is_zero() || spow[static_cast<std::size_t>(k - p)].is_zero()) continue;
        ck += gpq * spow[static_cast<std::size_t>(k - p)];
      }
    }
    s[static_cast<std::size_t>(k)] = -(ck / g01);
  }
  v.series.assign(s.begin() + 1, s.end());

  v.computed_orders.assign(n, 0);
  v.computed_orders[par] = a[par].is_zero() ? 1 : 0;
  if (a[sol].is_zero()) {
    v.computed_orders[sol] = -1;
    for (int k = 1; k <= prec; ++k)
      if (!s[static_cast<std::size_t>(k)].is_zero()) {
        v.computed_orders[sol] = k;
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (v.computed_orders[i] != orbit.vanishing_orders[i]) {
      std::ostringstream msg;
      msg << "vanishing order of " << curve.generators[i] << " is ";
      if (v.computed_orders[i] < 0) msg << "> " << prec; else msg << v.computed_orders[i];
      msg << ", declared " << orbit.vanishing_orders[i];
      fail(msg.str());
    }

  // Rotation of the local parameter, and compatibility of the series with it.
  const auto nu = affine_multipliers(orbit.stabilizer);
  const Cyclotomic nu_par = Cyclotomic::zeta(static_cast<int>(P), nu[par]);
  if (!a[par].is_zero()) {
    fail("the local parameter does not vanish at the representative");
  } else if (nu_par != Cyclotomic::zeta(static_cast<int>(orbit.stabilizer_order), orbit.rotation)) {
    fail("stabilizer generator rotates the local parameter by z(" + std::to_string(P) + ")^" + std::to_string(nu[par]) +
         ", not by the declared weight " + std::to_string(orbit.rotation));
  }
  const Cyclotomic nu_sol = Cyclotomic::zeta(static_cast<int>(P), nu[sol]);
  for (int k = 1; k <= prec; ++k)
    if (!s[static_cast<std::size_t>(k)].is_zero() && nu_par.pow(k) != nu_sol)
      fail("series term of degree " + std::to_string(k) + " is not equivariant");
  return v;
}

}  // namespace pqv
