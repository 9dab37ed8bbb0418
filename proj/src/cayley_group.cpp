#include "pqv/cayley_group.hpp"

#include <map>
#include <random>

#include "pqv/errors.hpp"

namespace pqv {

CayleyGroup::CayleyGroup(std::vector<std::vector<int>> table, int identity)
    : table_(std::move(table)), identity_(identity) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw UsageError("group table is empty");
  if (identity_ < 0 || identity_ >= n) throw UsageError("identity index out of range");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw UsageError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw UsageError("group table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (multiply(identity_, a) != a || multiply(a, identity_) != a)
      throw UsageError("identity index does not act as identity");
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw UsageError("group table: element without inverse");
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int samples = std::min(4096, n * n * n);
  for (int s = 0; s < samples; ++s) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) throw UsageError("group table is not associative");
  }
  order_of_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != identity_) {
      x = multiply(x, a);
      ++k;
      if (k > n) throw UsageError("group table: element of infinite order");
    }
    order_of_[static_cast<std::size_t>(a)] = k;
  }
}

CayleyGroup CayleyGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw UsageError("need at least one permutation generator");
  const std::size_t d = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != d) throw UsageError("permutation generators of different degree");
    std::vector<bool> hit(d, false);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= d || hit[static_cast<std::size_t>(v)])
        throw UsageError("generator is not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  using Perm = std::vector<int>;
  auto compose = [](const Perm& a, const Perm& b) {  // first a, then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return r;
  };
  Perm id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Perm p = compose(elems[head], g);
      if (!index.count(p)) {
        if (elems.size() >= kMaxOrder) throw UsageError("permutation group exceeds the order cap of 512");
        index.emplace(p, static_cast<int>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  return CayleyGroup(std::move(table), 0);
}

bool CayleyGroup::generates(std::span<const int> elements) const {
  std::vector<bool> seen(order(), false);
  std::vector<int> stack{identity_};
  seen[static_cast<std::size_t>(identity_)] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int g : elements) {
      const int y = multiply(x, g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == order();
}

bool CayleyGroup::is_abelian() const {
  const int n = static_cast<int>(order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

}  // namespace pqv
