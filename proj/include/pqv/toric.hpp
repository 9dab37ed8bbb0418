#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pqv/rational.hpp"
#include "pqv/singularity.hpp"

namespace pqv {

/// Exponent vector of a monomial.
using Exponents = std::vector<int>;

/// One exceptional ray of the toric resolution of a cyclic quotient
/// singularity, scaled to the lattice Z^n: w = lambda * v with v the ray's
/// primitive generator in N, and u = lambda * (<v, e_1+...+e_n> - 1) the
/// scaled discrepancy. The ray constrains exponents alpha of I_{kD} by
/// <alpha, w> >= -k*u.
struct RayDatum {
  std::vector<std::int64_t> w;
  std::int64_t u = 0;
  bool operator==(const RayDatum&) const = default;
};

/// The negative-discrepancy rays of one singularity, together with the
/// ambient dimension (so that an empty list still knows n).
struct RaySet {
  std::size_t dim = 0;
  std::vector<RayDatum> rays;
};

/// Monomial ideal in n variables kept as its unique minimal generating set
/// (a divisibility antichain), sorted lexicographically.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Any generating set; non-minimal generators are discarded.
  MonomialIdeal(std::size_t dim, std::vector<Exponents> generators);

  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_unit() const;
  /// True iff some generator divides alpha. Throws UsageError on a dimension mismatch.
  bool contains(std::span<const int> alpha) const;

  MonomialIdeal operator*(const MonomialIdeal& other) const;
  MonomialIdeal pow(int k) const;
  bool operator==(const MonomialIdeal& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Exponents> gens_;
};

bool member(const MonomialIdeal& ideal, std::span<const int> alpha);

/// All rays with negative discrepancy, ordered by the group element index
/// j = 1..m-1 that produces them. With primitive_only, rays whose w is a
/// proper multiple of an earlier retained w are dropped (their constraint is
/// implied).
RaySet negative_rays(const CyclicSingularityType& sing, bool primitive_only = false);

/// l_i: least positive integer with l_i*e_i in P_D (k = 1).
std::vector<std::int64_t> box_multipliers(const RaySet& rays);

/// Lattice points of Box_{k*l} cap P_{kD}; they generate I_{kD}. Sorted
/// lexicographically. Throws UsageError if some ray has u >= 0 or k < 1.
std::vector<Exponents> lattice_points(const RaySet& rays, int k);

/// The minimal monomial basis of I_{kD}.
MonomialIdeal minimal_basis(const RaySet& rays, int k);

struct StabilizationExponent {
  std::int64_t s_prime = 1;  ///< least integer clearing all vertex denominators
  std::int64_t s = 1;        ///< (n-1) * s_prime
  std::vector<std::vector<Rational>> vertices;  ///< vertices of Box_l cap P_D, sorted
};

/// Vertices of Box_l cap P_D by solving every n-subset of the bounding
/// hyperplanes exactly and keeping the feasible solutions.
StabilizationExponent stabilization_exponent(const RaySet& rays);

}  // namespace pqv
