#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pqv/rational.hpp"

namespace pqv {

/// Germ 1/m(a_1,...,a_n): C^n modulo the cyclic group generated by
/// diag(xi^{a_1}, ..., xi^{a_n}), xi a primitive m-th root of unity.
/// Weights are kept in the order given (the chart order of the local
/// coordinates); canonical_form() is for comparison only.
class CyclicSingularityType {
 public:
  /// Requires m >= 2, n >= 2, 1 <= a_i < m and gcd(a_i, m) = 1.
  CyclicSingularityType(int m, std::vector<int> weights);

  int order() const { return m_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }

  std::string str() const;  // "1/8(1,1,3)"
  auto operator<=>(const CyclicSingularityType&) const = default;

 private:
  int m_;
  std::vector<int> weights_;
};

enum class ReidTaiClass { terminal, canonical_not_terminal, noncanonical };

std::string to_string(ReidTaiClass c);

/// (1/m) * sum_i (j*a_i mod m) for 1 <= j < m.
Rational age(const CyclicSingularityType& sing, int j);

/// Reid-Tai: the smallest age over j = 1..m-1 compared with 1.
ReidTaiClass reid_tai_class(const CyclicSingularityType& sing);

/// Lexicographically least sorted weight tuple over all unit multiples
/// u*(a_1..a_n) mod m. Two types describe the same germ up to coordinate
/// permutation and choice of generator iff their canonical forms agree.
CyclicSingularityType canonical_form(const CyclicSingularityType& sing);

/// Parses "m,a1,...,an" (the CLI form).
CyclicSingularityType parse_singularity(const std::string& text);

}  // namespace pqv
