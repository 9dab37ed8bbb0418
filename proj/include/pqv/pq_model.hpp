#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqv/curve.hpp"
#include "pqv/singularity.hpp"

namespace pqv {

struct CurveFactor {
  WeightedCurve curve;
  ActionSpec action;
  std::vector<MarkedOrbit> orbits;
};

/// Declares that invariant monomials generate the relevant spaces of
/// pluricanonical sections, so that monomial counts are exact plurigenera.
/// This is a statement proved outside the program, hence only carried along.
struct ExactnessAttestation {
  bool all_degrees = false;
  std::vector<int> degrees;
  std::string citation;
  bool covers(int d) const;
};

/// (C_1 x ... x C_k)/G for an abelian G acting diagonally.
struct ProductQuotientModel {
  std::string name;
  AbelianGroup group;
  std::vector<CurveFactor> factors;
  std::optional<ExactnessAttestation> exactness;
  std::size_t dimension() const { return factors.size(); }
};

/// Structural checks: shared group, genus >= 2, faithful section actions,
/// a common convention between section and point actions, and a
/// Riemann-Hurwitz count showing the marked orbits exhaust the points with
/// nontrivial stabilizer. With series = true every marked orbit also goes
/// through validate_marked_orbit. Throws ValidationError naming the culprit.
void validate_model(const ProductQuotientModel& pq, bool series = true);

/// Genus of C/G, i.e. the number of invariant canonical monomials.
std::int64_t quotient_genus(const CurveFactor& factor, const AbelianGroup& group);

/// False when some nontrivial element acts trivially on H^0(K) of the factor.
bool section_action_faithful(const CurveFactor& factor, const AbelianGroup& group);

struct QuasiEtaleResult {
  bool ok = true;
  std::optional<GroupElement> offender;
  std::string reason;
};

/// Whether all fixed loci of nontrivial elements on the product are isolated.
QuasiEtaleResult quasi_etale_check(const ProductQuotientModel& pq);

struct SingularOrbitRecord {
  std::vector<std::size_t> orbits;  ///< index of the marked orbit on each factor
  GroupElement generator;           ///< h
  std::int64_t order = 1;           ///< m = |H|
  CyclicSingularityType raw_type;   ///< weights in factor order
  CyclicSingularityType canonical_type;
  std::int64_t count = 0;           ///< number of points on the quotient
  ReidTaiClass cls = ReidTaiClass::terminal;
  std::vector<std::vector<int>> vanishing_orders;  ///< per factor
};

struct BasketEntry {
  CyclicSingularityType type;
  std::int64_t count = 0;
  ReidTaiClass cls = ReidTaiClass::terminal;
};

struct SingularLocus {
  std::vector<SingularOrbitRecord> records;
  std::vector<BasketEntry> basket;  ///< aggregated by canonical type, sorted by type
  std::int64_t total() const;
  bool has_noncanonical() const;
};

SingularLocus singular_locus(const ProductQuotientModel& pq);

struct InvariantsRecord {
  std::int64_t p_g = 0;
  std::vector<std::int64_t> q;  ///< q_1 .. q_{k-1}
  std::optional<std::int64_t> chi;  ///< surfaces only: 1 - q_1 + p_g
};

/// Number of monomials in each character, indexed by character_index.
std::vector<std::int64_t> character_histogram(const CurveFactor& factor, const AbelianGroup& group, int d);

/// Invariant part of the tensor product over the given factors, by
/// convolving character histograms.
std::int64_t invariant_count(const std::vector<std::vector<std::int64_t>>& histograms, const AbelianGroup& group);

InvariantsRecord hodge_invariants(const ProductQuotientModel& pq);
std::int64_t invariant_dimension(const ProductQuotientModel& pq, int d);

struct KSquared {
  Rational k2;
  Rational k2_resolved;
};

/// Surfaces whose basket consists of 1/b(1,1) and A-type points only.
KSquared k_squared(const ProductQuotientModel& pq, const SingularLocus& locus);

/// p_g = 1 and q_1 = q_2 = 0; threefolds only.
bool numerical_cy(const InvariantsRecord& inv, std::size_t dimension);
bool numerical_cy(const ProductQuotientModel& pq);

}  // namespace pqv
