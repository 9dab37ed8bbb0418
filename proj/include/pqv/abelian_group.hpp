#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pqv {

/// Exponent tuple (e_1..e_k) of an element of Z_{n_1} + ... + Z_{n_k}.
struct GroupElement {
  std::vector<std::int64_t> exps;
  auto operator<=>(const GroupElement&) const = default;
};

/// Character of Z_{n_1} + ... + Z_{n_k}: the j-th abstract generator acts as
/// zeta_{n_j}^{weights[j]}.
struct Character {
  std::vector<std::int64_t> weights;
  auto operator<=>(const Character&) const = default;
  bool is_trivial() const;
};

class CayleyGroup;

/// Finite abelian group given by its cyclic orders.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const { return order_; }

  GroupElement identity() const;
  GroupElement element(std::vector<std::int64_t> exps) const;  // reduced mod n_i
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement multiple(const GroupElement& a, std::int64_t k) const;
  std::int64_t element_order(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  /// Mixed-radix index in [0, |G|), first coordinate most significant.
  std::int64_t index(const GroupElement& a) const;
  GroupElement from_index(std::int64_t i) const;
  std::vector<GroupElement> elements() const;

  Character trivial_character() const;
  Character add(const Character& a, const Character& b) const;
  std::int64_t character_index(const Character& c) const;
  Character character_from_index(std::int64_t i) const;

  /// a, 2a, ..., ord(a)*a = 0, as a sorted list.
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& a) const;
  /// Sorted elements of the subgroup generated by gens.
  std::vector<GroupElement> generated_subgroup(std::span<const GroupElement> gens) const;
  bool generates(std::span<const GroupElement> gens) const;

  /// Generator of <gens[0]> cap ... cap <gens[r-1]>, expressed as a power of
  /// gens[0] (the smallest positive power lying in all the others).
  GroupElement cyclic_intersection(std::span<const GroupElement> gens) const;

  /// Smallest j >= 0 with j*base == target, if any.
  std::optional<std::int64_t> discrete_log(const GroupElement& base, const GroupElement& target) const;

  CayleyGroup to_cayley() const;
  std::string str() const;
  std::string str(const GroupElement& a) const;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t order_ = 1;
};

}  // namespace pqv
