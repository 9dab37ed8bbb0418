#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pqv {

/// Finite group given by its multiplication table on element indices
/// 0..n-1. Used for the nonabelian groups users supply to the classifier.
class CayleyGroup {
 public:
  static constexpr std::size_t kMaxOrder = 512;

  CayleyGroup() = default;
  /// table[i][j] = index of i*j. Validates closure, identity and inverses,
  /// and spot-checks associativity; throws UsageError otherwise.
  CayleyGroup(std::vector<std::vector<int>> table, int identity);

  /// Expands the group generated by permutations of {0..d-1} (one-line
  /// notation) into a table. Throws UsageError past kMaxOrder elements.
  static CayleyGroup from_permutations(const std::vector<std::vector<int>>& generators);

  std::size_t order() const { return table_.size(); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return order_of_[static_cast<std::size_t>(a)]; }
  bool generates(std::span<const int> elements) const;
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> order_of_;
  int identity_ = 0;
};

}  // namespace pqv
