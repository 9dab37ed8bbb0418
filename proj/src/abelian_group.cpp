#include "pqv/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "pqv/cayley_group.hpp"
#include "pqv/rational.hpp"

namespace pqv {

bool Character::is_trivial() const {
  return std::all_of(weights.begin(), weights.end(), [](std::int64_t w) { return w == 0; });
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
    order_ *= n;
  }
}

GroupElement AbelianGroup::identity() const { return {std::vector<std::int64_t>(rank(), 0)}; }

GroupElement AbelianGroup::element(std::vector<std::int64_t> exps) const {
  if (exps.size() != rank()) throw std::invalid_argument("element rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) exps[i] = mod(exps[i], orders_[i]);
  return {std::move(exps)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < rank(); ++i) r.exps[i] = mod(a.exps[i] + b.exps[i], orders_[i]);
  return r;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const { return multiple(a, -1); }

GroupElement AbelianGroup::multiple(const GroupElement& a, std::int64_t k) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < rank(); ++i) r.exps[i] = mod(mod(k, orders_[i]) * a.exps[i], orders_[i]);
  return r;
}

std::int64_t AbelianGroup::element_order(const GroupElement& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t n = orders_[i];
    o = std::lcm(o, n / std::gcd(n, a.exps[i]));
  }
  return o;
}

bool AbelianGroup::contains(const GroupElement& a) const {
  if (a.exps.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a.exps[i] < 0 || a.exps[i] >= orders_[i]) return false;
  return true;
}

std::int64_t AbelianGroup::index(const GroupElement& a) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * orders_[i] + a.exps[i];
  return idx;
}

GroupElement AbelianGroup::from_index(std::int64_t idx) const {
  GroupElement r = identity();
  for (std::size_t i = rank(); i-- > 0;) {
    r.exps[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return r;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(from_index(i));
  return out;
}

Character AbelianGroup::trivial_character() const { return {std::vector<std::int64_t>(rank(), 0)}; }

Character AbelianGroup::add(const Character& a, const Character& b) const {
  Character r = a;
  for (std::size_t i = 0; i < rank(); ++i) r.weights[i] = mod(a.weights[i] + b.weights[i], orders_[i]);
  return r;
}

std::int64_t AbelianGroup::character_index(const Character& c) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * orders_[i] + c.weights[i];
  return idx;
}

Character AbelianGroup::character_from_index(std::int64_t idx) const {
  Character r = trivial_character();
  for (std::size_t i = rank(); i-- > 0;) {
    r.weights[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return r;
}

std::vector<GroupElement> AbelianGroup::cyclic_subgroup(const GroupElement& a) const {
  std::vector<GroupElement> out;
  const std::int64_t o = element_order(a);
  out.reserve(static_cast<std::size_t>(o));
  for (std::int64_t k = 0; k < o; ++k) out.push_back(multiple(a, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> AbelianGroup::generated_subgroup(std::span<const GroupElement> gens) const {
  std::unordered_set<std::int64_t> seen{index(identity())};
  std::vector<GroupElement> frontier{identity()};
  std::vector<GroupElement> all{identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = add(x, g);
        if (seen.insert(index(y)).second) {
          next.push_back(y);
          all.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool AbelianGroup::generates(std::span<const GroupElement> gens) const {
  return static_cast<std::int64_t>(generated_subgroup(gens).size()) == order_;
}

GroupElement AbelianGroup::cyclic_intersection(std::span<const GroupElement> gens) const {
  if (gens.empty()) throw std::invalid_argument("cyclic_intersection needs at least one element");
  GroupElement h = gens[0];
  for (std::size_t r = 1; r < gens.size(); ++r) {
    std::unordered_set<std::int64_t> other;
    for (const auto& x : cyclic_subgroup(gens[r])) other.insert(index(x));
    const std::int64_t o = element_order(h);
    std::int64_t k = 1;
    while (k < o && !other.count(index(multiple(h, k)))) ++k;
    h = multiple(h, k);  // k == o gives the identity
  }
  return h;
}

std::optional<std::int64_t> AbelianGroup::discrete_log(const GroupElement& base, const GroupElement& target) const {
  const std::int64_t o = element_order(base);
  GroupElement x = identity();
  for (std::int64_t j = 0; j < o; ++j) {
    if (x == target) return j;
    x = add(x, base);
  }
  return std::nullopt;
}

CayleyGroup AbelianGroup::to_cayley() const {
  const auto n = static_cast<std::size_t>(order_);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement a = from_index(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = static_cast<int>(index(add(a, from_index(static_cast<std::int64_t>(j)))));
  }
  return CayleyGroup(std::move(table), 0);
}

std::string AbelianGroup::str() const {
  std::string s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(orders_[i]);
  }
  return s.empty() ? "1" : s;
}

std::string AbelianGroup::str(const GroupElement& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.exps[i]);
  }
  return s + ")";
}

}  // namespace pqv
