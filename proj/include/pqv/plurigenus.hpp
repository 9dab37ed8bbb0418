#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqv/pq_model.hpp"
#include "pqv/toric.hpp"

namespace pqv {

/// One canonical-ring monomial per factor.
using ProductMonomial = std::vector<Exponents>;

/// The stalk condition at one noncanonical point class: a product monomial
/// is a local section of the twisted sheaf iff its local exponent vector
/// lies in `ideal`.
struct StalkCondition {
  std::size_t record = 0;  ///< index into SingularLocus::records
  CyclicSingularityType raw_type;
  RaySet rays;
  MonomialIdeal ideal;
  std::vector<std::vector<int>> order_maps;  ///< per factor: vanishing orders of the ring generators
  /// Local exponent on factor i: the dot product of order_maps[i] with the factor's exponents.
  std::vector<int> local_exponents(const ProductMonomial& m) const;
};

std::vector<StalkCondition> stalk_conditions(const ProductQuotientModel& pq, const SingularLocus& locus, int d);

struct PlurigenusReport {
  int d = 0;
  std::int64_t invariant_dimension = 0;
  std::int64_t count = 0;  ///< lower bound for P_d; exact when `exact`
  std::vector<ProductMonomial> witnesses;
  bool witnesses_truncated = false;
  bool exact = false;
};

inline constexpr std::size_t kDefaultWitnessCap = 1000;

PlurigenusReport plurigenus_monomial(const ProductQuotientModel& pq, const SingularLocus& locus, int d,
                                     std::size_t witness_cap = kDefaultWitnessCap);
PlurigenusReport plurigenus_monomial(const ProductQuotientModel& pq, int d, std::size_t witness_cap = kDefaultWitnessCap);

/// Re-derives invariance and every stalk inequality for one monomial from
/// the singularity types and the ray inequalities, without the ideal bases.
bool is_admissible_monomial(const ProductQuotientModel& pq, const SingularLocus& locus, int d, const ProductMonomial& m);

/// All G-invariant Kunneth monomials of multidegree (d, ..., d).
std::vector<ProductMonomial> invariant_monomials(const ProductQuotientModel& pq, int d);

/// invariant_dimension(pq, 2) - plurigenus_monomial(pq, 2).count
std::int64_t codimension_check(const ProductQuotientModel& pq);

struct VolumeReport {
  std::int64_t vol = 0;
  Rational r;
  bool minimal = false;
};

/// Volume of a regular-or-not surface of general type from its plurigenera,
/// and the number of contractions to the minimal model.
VolumeReport volume_and_minimality(std::int64_t p_g, std::int64_t q, std::int64_t p2, std::optional<std::int64_t> p3,
                                   const Rational& k2_resolved);

enum class Verdict { not_cy, consistent_cy, inconclusive, not_applicable };
std::string to_string(Verdict v);

struct CyVerdict {
  Verdict verdict = Verdict::not_applicable;
  int d_max = 0;
  std::optional<int> certificate_degree;  ///< degree with at least two monomial sections
  bool kodaira_at_least_two = false;
  std::vector<ProductMonomial> kodaira_witnesses;
  std::vector<PlurigenusReport> reports;
};

/// Three witnesses each containing a variable that is absent from the other two.
std::optional<std::array<std::size_t, 3>> private_variable_triple(const std::vector<ProductMonomial>& witnesses);

CyVerdict cy_verdict(const ProductQuotientModel& pq, int d_max);

struct SurfaceRow {
  std::int64_t genus = 0;  ///< genus of the first factor
  Rational k2;
  Rational k2_resolved;
  std::int64_t p_g = 0;
  std::int64_t q = 0;
  std::int64_t chi = 0;
  std::int64_t h0_2k = 0;
  std::int64_t p2 = 0;
  bool p2_exact = false;
  std::int64_t vol = 0;
  Rational vol_minus_k2;
};

SurfaceRow surface_report(const ProductQuotientModel& pq);

/// "x11^2*x03" style rendering: generator name followed by the factor number.
std::string monomial_string(const ProductQuotientModel& pq, const ProductMonomial& m);

}  // namespace pqv
