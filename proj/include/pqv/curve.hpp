#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "pqv/abelian_group.hpp"
#include "pqv/cyclotomic.hpp"
#include "pqv/toric.hpp"

namespace pqv {

struct PolynomialTerm {
  Cyclotomic coeff;
  Exponents exps;
};

/// A curve embedded as a hypersurface of a weighted projective plane,
/// together with the data that identifies its canonical ring:
/// H^0(dK) is spanned by the monomials of weighted degree
/// canonical_degree * d whose exponents respect max_exponents.
struct WeightedCurve {
  std::vector<std::string> generators;
  std::vector<int> weights;
  std::vector<PolynomialTerm> equation;
  int genus = 0;
  int canonical_degree = 1;
  /// Per generator; -1 means unbounded. These encode the rewriting rule of
  /// the defining relation (y^2 -> ..., x2^n -> ...).
  std::vector<int> max_exponents;
};

/// A diagonal abelian action on one curve.
///
/// Sections: abstract generator j multiplies the ring generator i by
/// zeta_{M_j}^{section_weights[i][j]} with M_j = section_lift[j] * n_j.
/// A lift L_j > 1 is needed when the action on the ring generators is only
/// defined by a root of unity of higher order (eta with eta^2 = omega);
/// every monomial of the canonical ring then has a character divisible by
/// L_j. The convention is generator . monomial = zeta^eps . monomial.
///
/// Points: abstract generator j sends coordinate i to
/// zeta_P^{point_exponents[j][i]} * x_i with P = point_conductor.
struct ActionSpec {
  AbelianGroup group;
  std::vector<std::int64_t> section_lift;
  std::vector<std::vector<std::int64_t>> section_weights;
  int point_conductor = 1;
  std::vector<std::vector<std::int64_t>> point_exponents;
};

/// A G-orbit of points with nontrivial stabilizer, with its local data.
struct MarkedOrbit {
  std::string label;
  std::vector<Cyclotomic> representative;
  GroupElement stabilizer;          ///< generator of the (cyclic) stabilizer
  std::int64_t stabilizer_order = 1;
  std::int64_t rotation = 1;        ///< generator acts on a local parameter by zeta_{|stab|}^rotation
  std::int64_t orbit_size = 1;
  std::int64_t multiplicity = 1;    ///< number of orbits sharing exactly these data
  std::vector<int> vanishing_orders;  ///< order of each ring generator at the representative
};

/// Exponent vectors of weighted degree canonical_degree * d, lexicographic.
std::vector<Exponents> canonical_monomials(const WeightedCurve& curve, int d);

/// Throws ValidationError if a section character is not divisible by the lift.
Character monomial_character(const ActionSpec& action, std::span<const int> alpha);

/// zeta_P exponents by which the element g multiplies each coordinate.
std::vector<std::int64_t> point_action(const ActionSpec& action, const GroupElement& g);

/// Whether g acts as the identity on the weighted projective plane (the
/// multipliers are t^{w_i} for one scalar t). Needs a weight-1 generator.
bool acts_trivially(const WeightedCurve& curve, const ActionSpec& action, const GroupElement& g);

/// Structural checks of a curve/action pair: dimensions, semi-invariance of
/// the equation, genus = number of canonical monomials. Throws ValidationError.
void check_curve_action(const WeightedCurve& curve, const ActionSpec& action);

/// Relative convention of the two actions. On a ratio x_i / x_c^{w_i}
/// (x_c of weight 1) the section action must act by the sigma-th power of the
/// point action, for every group generator. Returns +1 or -1, 0 when neither
/// sign fits, and 2 when both do.
int section_point_sign(const WeightedCurve& curve, const ActionSpec& action);

/// Change of generators of (Z_n)^r: rows of new_in_old express the new
/// generators in the old ones.
struct BasisChange {
  std::int64_t n = 1;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> new_in_old;
  /// Rows express the old generators in the new ones.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> old_in_new;
  std::int64_t det = 1;          ///< mod n
  std::int64_t det_inverse = 1;  ///< mod n
};

/// Throws ValidationError when the matrix is not invertible mod n.
BasisChange basis_change(std::int64_t n, const std::vector<std::vector<std::int64_t>>& new_in_old);

/// The action in which the new generator k behaves like generator k of
/// `geometric`, rewritten in the old generators.
ActionSpec reindex_action(const ActionSpec& geometric, const BasisChange& change);

struct OrbitValidation {
  bool ok = true;
  std::vector<std::string> problems;
  std::size_t chart = 0;            ///< generator set to 1
  std::size_t parameter = 0;        ///< generator whose affine coordinate is the local parameter
  std::vector<int> computed_orders;  ///< -1: beyond the series precision
  std::vector<Cyclotomic> series;   ///< solved coordinate minus its value, coefficients of t^1..t^P
  int precision = 0;
};

/// Checks a marked orbit against the curve: the representative lies on the
/// curve, the stabilizer generator fixes it, and a truncated power-series
/// solution of the equation at the point reproduces the declared vanishing
/// orders and rotation weight. Curves must have exactly three generators.
OrbitValidation validate_marked_orbit(const WeightedCurve& curve, const ActionSpec& action, const MarkedOrbit& orbit);

}  // namespace pqv
