#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pqv/abelian_group.hpp"
#include "pqv/cayley_group.hpp"
#include "pqv/rational.hpp"

namespace pqv {

/// Branching type [m_1, ..., m_r] of a G-cover of P^1, kept sorted.
using BranchType = std::vector<int>;

struct FactorType {
  int genus = 0;
  BranchType type;
  auto operator<=>(const FactorType&) const = default;
};

/// Admissible branching data for a product of k curves with a common group
/// of order n. Factors are sorted nondecreasingly.
struct TypeTuple {
  std::int64_t n = 0;
  std::vector<FactorType> factors;
  auto operator<=>(const TypeTuple&) const = default;
};

/// Genus of a G-cover of P^1 with |G| = n and type T, if Riemann-Hurwitz
/// gives an integer.
std::optional<int> hurwitz_genus(std::int64_t n, const BranchType& type);

/// Wiman bound, divisibility, the bound on r, and Riemann-Hurwitz with the given genus.
bool admissible(int genus, std::int64_t n, const BranchType& type);

/// All factor types of genus 2..g_max with |G| = n.
std::vector<FactorType> factor_types(int g_max, std::int64_t n, std::optional<int> r_exact = std::nullopt);

/// All tuples with n <= 84(g_max - 1); ordered by n, then lexicographically.
std::vector<TypeTuple> enumerate_types(int g_max, int k = 3, std::optional<int> r_exact = std::nullopt);

struct VectorSearch {
  std::optional<std::vector<int>> witness;  ///< element indices in the group table
  std::int64_t count = 0;                   ///< number of vectors, when counted
};

/// Generating vectors (h_1..h_r) with ord(h_j) = m_j, h_1 * ... * h_r = 1,
/// generating the group; the last element is forced by the others. With
/// count_all the search continues past the first witness.
VectorSearch generating_vectors(const CayleyGroup& group, const BranchType& type, bool count_all = false);

/// The same for an abelian group; the witness is returned as elements.
std::optional<std::vector<GroupElement>> generating_vector(const AbelianGroup& group, const BranchType& type);

bool is_generating_vector(const CayleyGroup& group, const BranchType& type, const std::vector<int>& elements);

struct NamedGroup {
  std::string name;
  CayleyGroup table;
  std::optional<AbelianGroup> abelian;  ///< when given by cyclic orders
};

NamedGroup named_abelian(const AbelianGroup& g);

struct CandidateRecord {
  std::string group;
  TypeTuple types;
  std::vector<std::vector<int>> witnesses;  ///< one generating vector per factor
};

/// Tuples of order |G| whose every factor admits a generating vector in G.
std::vector<CandidateRecord> classify_candidates(int g_max, std::optional<int> r_exact, const std::vector<NamedGroup>& groups,
                                                 int k = 3);

std::string to_string(const BranchType& t);

}  // namespace pqv
