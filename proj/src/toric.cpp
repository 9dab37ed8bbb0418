#include "pqv/toric.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "pqv/errors.hpp"

namespace pqv {

namespace {

bool divides(std::span<const int> g, std::span<const int> a) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > a[i]) return false;
  return true;
}

int total_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

// Keeps the divisibility-minimal elements. Sorting by total degree first
// means a divisor is always seen before its multiples.
std::vector<Exponents> minimalize(std::vector<Exponents> pts) {
  std::sort(pts.begin(), pts.end(), [](const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Exponents> kept;
  for (auto& p : pts) {
    bool dominated = false;
    for (const auto& g : kept) {
      if (divides(g, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void require_negative(const RaySet& rays) {
  for (const auto& r : rays.rays) {
    if (r.u >= 0) throw UsageError("ray with nonnegative discrepancy passed to the ideal computation");
    if (r.w.size() != rays.dim) throw UsageError("ray dimension mismatch");
  }
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact Gauss-Jordan; nullopt when the system is singular.
std::optional<RationalVector> solve_exact(RationalMatrix a, RationalVector b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.row(col).swap(a.row(piv));
    std::swap(b(col), b(piv));
    const Rational p = a(col, col);
    a.row(col) /= p;
    b(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      b(r) -= f * b(col);
    }
  }
  return b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Exponents> generators) : dim_(dim) {
  for (const auto& g : generators) {
    if (g.size() != dim_) throw UsageError("monomial ideal generator has wrong dimension");
    for (int e : g)
      if (e < 0) throw UsageError("negative exponent in monomial ideal generator");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {Exponents(dim, 0)}); }

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_.front()) == 0; }

bool MonomialIdeal::contains(std::span<const int> alpha) const {
  if (alpha.size() != dim_) throw UsageError("membership test: dimension mismatch");
  for (const auto& g : gens_)
    if (divides(g, alpha)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw UsageError("product of monomial ideals of different dimension");
  std::vector<Exponents> prods;
  prods.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) {
      Exponents c(dim_);
      for (std::size_t i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
      prods.push_back(std::move(c));
    }
  }
  return MonomialIdeal(dim_, std::move(prods));
}

MonomialIdeal MonomialIdeal::pow(int k) const {
  MonomialIdeal r = unit(dim_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool member(const MonomialIdeal& ideal, std::span<const int> alpha) { return ideal.contains(alpha); }

RaySet negative_rays(const CyclicSingularityType& sing, bool primitive_only) {
  const std::int64_t m = sing.order();
  RaySet out{sing.dimension(), {}};
  for (std::int64_t j = 1; j < m; ++j) {
    std::vector<std::int64_t> res;
    std::int64_t sum = 0;
    for (int a : sing.weights()) {
      res.push_back((j * a) % m);
      sum += res.back();
    }
    if (sum >= m) continue;  // age >= 1
    // v = res/m; lambda = lcm of the reduced denominators m/gcd(res_i, m).
    std::int64_t lambda = 1;
    for (auto r : res) lambda = std::lcm(lambda, m / std::gcd(r, m));
    RayDatum ray;
    for (auto r : res) ray.w.push_back(r * lambda / m);
    ray.u = (sum - m) * lambda / m;
    if (primitive_only) {
      std::int64_t g = 0;
      for (auto x : ray.w) g = std::gcd(g, x);
      std::vector<std::int64_t> prim;
      for (auto x : ray.w) prim.push_back(x / g);
      const bool seen = std::any_of(out.rays.begin(), out.rays.end(), [&](const RayDatum& r) {
        std::int64_t h = 0;
        for (auto x : r.w) h = std::gcd(h, x);
        for (std::size_t i = 0; i < prim.size(); ++i)
          if (r.w[i] / h != prim[i]) return false;
        return true;
      });
      if (seen) continue;
    }
    out.rays.push_back(std::move(ray));
  }
  return out;
}

std::vector<std::int64_t> box_multipliers(const RaySet& rays) {
  require_negative(rays);
  std::vector<std::int64_t> l(rays.dim, 1);
  for (std::size_t i = 0; i < rays.dim; ++i)
    for (const auto& r : rays.rays) l[i] = std::max(l[i], ceil_div(-r.u, r.w[i]));
  return l;
}

std::vector<Exponents> lattice_points(const RaySet& rays, int k) {
  if (k < 1) throw UsageError("ideal level k must be positive");
  const auto l = box_multipliers(rays);
  const std::size_t n = rays.dim;
  std::vector<std::int64_t> upper(n);
  for (std::size_t i = 0; i < n; ++i) upper[i] = k * l[i];
  std::vector<std::int64_t> rhs;
  for (const auto& r : rays.rays) rhs.push_back(-k * r.u);

  std::vector<Exponents> out;
  Exponents cur(n, 0);
  std::vector<std::int64_t> partial(rays.rays.size(), 0);
  // Largest value the coordinates from position i on can still add to each
  // constraint (all w entries are positive).
  std::vector<std::vector<std::int64_t>> tail(n + 1, std::vector<std::int64_t>(rays.rays.size(), 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t r = 0; r < rays.rays.size(); ++r) tail[i][r] = tail[i + 1][r] + upper[i] * rays.rays[r].w[i];

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (std::size_t r = 0; r < rays.rays.size(); ++r)
      if (partial[r] + tail[i][r] < rhs[r]) return;
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= upper[i]; ++v) {
      cur[i] = static_cast<int>(v);
      for (std::size_t r = 0; r < rays.rays.size(); ++r) partial[r] += v * rays.rays[r].w[i];
      rec(i + 1);
      for (std::size_t r = 0; r < rays.rays.size(); ++r) partial[r] -= v * rays.rays[r].w[i];
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

MonomialIdeal minimal_basis(const RaySet& rays, int k) { return MonomialIdeal(rays.dim, lattice_points(rays, k)); }

StabilizationExponent stabilization_exponent(const RaySet& rays) {
  const auto l = box_multipliers(rays);
  const std::size_t n = rays.dim;
  // Rows a.x >= b.
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    rows.push_back(e);
    rhs.push_back(0);
    e[i] = -1;
    rows.push_back(e);
    rhs.push_back(-l[i]);
  }
  for (const auto& r : rays.rays) {
    rows.push_back(r.w);
    rhs.push_back(-r.u);
  }
  std::set<std::vector<Rational>> vertices;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      RationalMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      RationalVector b(static_cast<Eigen::Index>(n));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[pick[r]][c];
        b(static_cast<Eigen::Index>(r)) = rhs[pick[r]];
      }
      auto x = solve_exact(a, b);
      if (!x) return;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Rational lhs = 0;
        for (std::size_t c = 0; c < n; ++c) lhs += rows[r][c] * (*x)(static_cast<Eigen::Index>(c));
        if (lhs < rhs[r]) return;
      }
      vertices.insert(std::vector<Rational>(x->data(), x->data() + n));
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);

  StabilizationExponent out;
  BigInt den = 1;
  for (const auto& v : vertices)
    for (const auto& c : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  out.s_prime = den.convert_to<std::int64_t>();
  out.s = static_cast<std::int64_t>(n - 1) * out.s_prime;
  out.vertices.assign(vertices.begin(), vertices.end());
  return out;
}

}  // namespace pqv
