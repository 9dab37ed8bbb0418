#include "pqv/classification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pqv/errors.hpp"
#include "pqv/parallel.hpp"

namespace pqv {

namespace {

void extend_types(std::int64_t n, const std::vector<int>& divisors, std::size_t from, const Rational& remaining,
                  BranchType& cur, std::size_t r_max, std::vector<BranchType>& out) {
  // remaining = 2 + (2g-2)/n - sum so far must be consumed by terms 1 - 1/m.
  if (remaining == 0 && cur.size() >= 1) out.push_back(cur);
  if (cur.size() == r_max || remaining <= 0) return;
  for (std::size_t i = from; i < divisors.size(); ++i) {
    const Rational term = 1 - make_rational(1, divisors[i]);
    if (term > remaining) break;
    cur.push_back(divisors[i]);
    extend_types(n, divisors, i, remaining - term, cur, r_max, out);
    cur.pop_back();
  }
}

void combine(const std::vector<FactorType>& options, std::size_t from, int k, std::vector<FactorType>& cur, std::int64_t n,
             std::vector<TypeTuple>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(TypeTuple{n, cur});
    return;
  }
  for (std::size_t i = from; i < options.size(); ++i) {
    cur.push_back(options[i]);
    combine(options, i, k, cur, n, out);
    cur.pop_back();
  }
}

}  // namespace

std::string to_string(const BranchType& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ']';
  return out.str();
}

std::optional<int> hurwitz_genus(std::int64_t n, const BranchType& type) {
  Rational s = -2;
  for (int m : type) s += 1 - make_rational(1, m);
  const Rational g = 1 + make_rational(n) * s / 2;
  if (!is_integer(g)) return std::nullopt;
  return static_cast<int>(numerator(g));
}

bool admissible(int genus, std::int64_t n, const BranchType& type) {
  if (genus < 2 || n < 2) return false;
  for (int m : type)
    if (m < 2 || m > 4 * genus + 2 || n % m != 0) return false;
  if (make_rational(static_cast<std::int64_t>(type.size())) > make_rational(4 * (genus - 1), n) + 4) return false;
  Rational s = -2;
  for (int m : type) s += make_rational(m - 1, m);
  return make_rational(2 * genus - 2) == make_rational(n) * s;
}

std::vector<FactorType> factor_types(int g_max, std::int64_t n, std::optional<int> r_exact) {
  std::vector<int> divisors;
  for (std::int64_t m = 2; m <= std::min<std::int64_t>(n, 4 * g_max + 2); ++m)
    if (n % m == 0) divisors.push_back(static_cast<int>(m));
  std::vector<FactorType> out;
  for (int g = 2; g <= g_max; ++g) {
    // sum of (1 - 1/m_j) equals 2 + (2g-2)/n
    const Rational target = 2 + make_rational(2 * g - 2, n);
    std::vector<BranchType> types;
    BranchType cur;
    const auto r_max = static_cast<std::size_t>(4 * (g - 1) / n + 4);
    extend_types(n, divisors, 0, target, cur, r_max, types);
    for (auto& t : types) {
      if (r_exact && static_cast<int>(t.size()) != *r_exact) continue;
      if (admissible(g, n, t)) out.push_back(FactorType{g, std::move(t)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TypeTuple> enumerate_types(int g_max, int k, std::optional<int> r_exact) {
  if (g_max < 2) throw UsageError("g_max must be at least 2");
  if (k < 1) throw UsageError("the number of factors must be positive");
  std::vector<TypeTuple> out;
  for (std::int64_t n = 2; n <= 84 * (g_max - 1); ++n) {
    const auto options = factor_types(g_max, n, r_exact);
    std::vector<FactorType> cur;
    combine(options, 0, k, cur, n, out);
  }
  return out;
}

bool is_generating_vector(const CayleyGroup& group, const BranchType& type, const std::vector<int>& elements) {
  if (elements.size() != type.size()) return false;
  int prod = group.identity();
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (elements[j] < 0 || static_cast<std::size_t>(elements[j]) >= group.order()) return false;
    if (group.element_order(elements[j]) != type[j]) return false;
    prod = group.multiply(prod, elements[j]);
  }
  return prod == group.identity() && group.generates(elements);
}

VectorSearch generating_vectors(const CayleyGroup& group, const BranchType& type, bool count_all) {
  VectorSearch res;
  const std::size_t r = type.size();
  if (r == 0 || r > 4) throw UsageError("generating vector search supports 1 to 4 branch points");
  for (int m : type)
    if (group.order() % static_cast<std::size_t>(m) != 0) return res;
  std::map<int, std::vector<int>> by_order;
  for (std::size_t x = 0; x < group.order(); ++x) by_order[group.element_order(static_cast<int>(x))].push_back(static_cast<int>(x));
  std::vector<int> cur;
  // Depth-first over h_1..h_{r-1}; h_r closes the product.
  auto rec = [&](auto&& self, int prod) -> bool {
    if (cur.size() + 1 == r) {
      const int last = group.inverse(prod);
      if (group.element_order(last) != type[r - 1]) return false;
      cur.push_back(last);
      const bool ok = group.generates(cur);
      if (ok) {
        ++res.count;
        if (!res.witness) res.witness = cur;
      }
      cur.pop_back();
      return ok && !count_all;
    }
    for (int x : by_order[type[cur.size()]]) {
      cur.push_back(x);
      const bool stop = self(self, group.multiply(prod, x));
      cur.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, group.identity());
  return res;
}

std::optional<std::vector<GroupElement>> generating_vector(const AbelianGroup& group, const BranchType& type) {
  const auto res = generating_vectors(group.to_cayley(), type);
  if (!res.witness) return std::nullopt;
  std::vector<GroupElement> out;
  for (int x : *res.witness) out.push_back(group.from_index(x));
  return out;
}

NamedGroup named_abelian(const AbelianGroup& g) { return NamedGroup{g.str(), g.to_cayley(), g}; }

std::vector<CandidateRecord> classify_candidates(int g_max, std::optional<int> r_exact, const std::vector<NamedGroup>& groups,
                                                 int k) {
  std::vector<CandidateRecord> out;
  if (groups.empty()) return out;
  const auto tuples = enumerate_types(g_max, k, r_exact);
  for (const auto& grp : groups) {
    std::vector<const TypeTuple*> mine;
    for (const auto& t : tuples)
      if (t.n == static_cast<std::int64_t>(grp.table.order())) mine.push_back(&t);
    // Each distinct branch type is searched once.
    std::map<BranchType, std::optional<std::vector<int>>> cache;
    for (const auto* t : mine)
      for (const auto& f : t->factors) cache.try_emplace(f.type);
    std::vector<BranchType> keys;
    for (const auto& [type, w] : cache) keys.push_back(type);
    std::vector<std::optional<std::vector<int>>> found(keys.size());
    parallel_chunks(keys.size(), [&](std::size_t i) { found[i] = generating_vectors(grp.table, keys[i]).witness; });
    for (std::size_t i = 0; i < keys.size(); ++i) cache[keys[i]] = found[i];
    for (const auto* t : mine) {
      CandidateRecord rec{grp.name, *t, {}};
      bool ok = true;
      for (const auto& f : t->factors) {
        const auto& w = cache[f.type];
        if (!w) {
          ok = false;
          break;
        }
        rec.witnesses.push_back(*w);
      }
      if (ok) out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace pqv
