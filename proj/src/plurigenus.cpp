#include "pqv/plurigenus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pqv/errors.hpp"
#include "pqv/parallel.hpp"

namespace pqv {

namespace {

int dot(const std::vector<int>& a, const Exponents& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t negate_character(const AbelianGroup& group, std::int64_t i) {
  Character c = group.character_from_index(i);
  for (std::size_t j = 0; j < c.weights.size(); ++j) c.weights[j] = mod(-c.weights[j], group.orders()[j]);
  return group.character_index(c);
}

// Monomials of one factor grouped by (character, local exponent at each condition).
struct Bucket {
  std::int64_t character = 0;
  std::vector<int> orders;
  std::vector<std::size_t> members;
};

std::vector<Bucket> bucketize(const CurveFactor& f, std::size_t factor, const AbelianGroup& group,
                              const std::vector<Exponents>& monomials, const std::vector<StalkCondition>& conds) {
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_key;
  for (std::size_t a = 0; a < monomials.size(); ++a) {
    std::vector<std::int64_t> key{group.character_index(monomial_character(f.action, monomials[a]))};
    for (const auto& c : conds) key.push_back(dot(c.order_maps[factor], monomials[a]));
    by_key[key].push_back(a);
  }
  std::vector<Bucket> out;
  for (auto& [key, members] : by_key) {
    Bucket b;
    b.character = key[0];
    for (std::size_t i = 1; i < key.size(); ++i) b.orders.push_back(static_cast<int>(key[i]));
    b.members = std::move(members);
    out.push_back(std::move(b));
  }
  return out;
}

struct ChunkResult {
  std::int64_t count = 0;
  std::vector<ProductMonomial> witnesses;
  bool truncated = false;
};

// Visits every combination of buckets with trivial total character whose
// local exponents pass all conditions.
class BucketSearch {
 public:
  BucketSearch(const ProductQuotientModel& pq, int d, std::vector<StalkCondition> conds, bool check_stalks)
      : pq_(pq), conds_(std::move(conds)), check_(check_stalks) {
    const std::size_t k = pq.factors.size();
    for (std::size_t i = 0; i < k; ++i) {
      monomials_.push_back(canonical_monomials(pq.factors[i].curve, d));
      buckets_.push_back(bucketize(pq.factors[i], i, pq.group, monomials_.back(), check_ ? conds_ : std::vector<StalkCondition>{}));
    }
    for (std::size_t b = 0; b < buckets_.back().size(); ++b) last_by_char_[buckets_.back()[b].character].push_back(b);
  }

  std::size_t first_buckets() const { return buckets_[0].size(); }

  ChunkResult run(std::size_t first, std::size_t cap) const {
    ChunkResult res;
    std::vector<std::size_t> pick{first};
    recurse(pick, buckets_[0][first].character, cap, res);
    return res;
  }

 private:
  void recurse(std::vector<std::size_t>& pick, std::int64_t chi, std::size_t cap, ChunkResult& res) const {
    const std::size_t k = buckets_.size();
    const auto& G = pq_.group;
    if (pick.size() + 1 < k) {
      const std::size_t i = pick.size();
      const Character c = G.character_from_index(chi);
      for (std::size_t b = 0; b < buckets_[i].size(); ++b) {
        pick.push_back(b);
        recurse(pick, G.character_index(G.add(c, G.character_from_index(buckets_[i][b].character))), cap, res);
        pick.pop_back();
      }
      return;
    }
    const auto it = last_by_char_.find(negate_character(G, chi));
    if (it == last_by_char_.end()) return;
    for (std::size_t b : it->second) {
      pick.push_back(b);
      if (passes(pick)) {
        std::int64_t n = 1;
        for (std::size_t i = 0; i < k; ++i) n *= static_cast<std::int64_t>(buckets_[i][pick[i]].members.size());
        res.count += n;
        collect(pick, cap, res);
      }
      pick.pop_back();
    }
  }

  bool passes(const std::vector<std::size_t>& pick) const {
    if (!check_) return true;
    std::vector<int> local(pick.size());
    for (std::size_t c = 0; c < conds_.size(); ++c) {
      for (std::size_t i = 0; i < pick.size(); ++i) local[i] = buckets_[i][pick[i]].orders[c];
      if (!conds_[c].ideal.contains(local)) return false;
    }
    return true;
  }

  void collect(const std::vector<std::size_t>& pick, std::size_t cap, ChunkResult& res) const {
    const std::size_t k = pick.size();
    std::vector<std::size_t> pos(k, 0);
    while (true) {
      if (res.witnesses.size() >= cap) {
        res.truncated = true;
        return;
      }
      ProductMonomial m;
      for (std::size_t i = 0; i < k; ++i) m.push_back(monomials_[i][buckets_[i][pick[i]].members[pos[i]]]);
      res.witnesses.push_back(std::move(m));
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++pos[i] < buckets_[i][pick[i]].members.size()) break;
        pos[i] = 0;
        if (i == 0) return;
      }
    }
  }

  const ProductQuotientModel& pq_;
  std::vector<StalkCondition> conds_;
  bool check_;
  std::vector<std::vector<Exponents>> monomials_;
  std::vector<std::vector<Bucket>> buckets_;
  std::map<std::int64_t, std::vector<std::size_t>> last_by_char_;
};

ChunkResult run_search(const BucketSearch& search, std::size_t cap) {
  const std::size_t n = search.first_buckets();
  std::vector<ChunkResult> parts(n);
  parallel_chunks(n, [&](std::size_t c) { parts[c] = search.run(c, cap); });
  ChunkResult total;
  for (auto& p : parts) {
    total.count += p.count;
    for (auto& w : p.witnesses) {
      if (total.witnesses.size() >= cap) {
        total.truncated = true;
        break;
      }
      total.witnesses.push_back(std::move(w));
    }
    total.truncated = total.truncated || p.truncated;
  }
  return total;
}

}  // namespace

std::vector<int> StalkCondition::local_exponents(const ProductMonomial& m) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(dot(order_maps[i], m[i]));
  return out;
}

std::vector<StalkCondition> stalk_conditions(const ProductQuotientModel& pq, const SingularLocus& locus, int d) {
  if (d < 1) throw UsageError("degree must be at least 1");
  std::vector<StalkCondition> out;
  for (std::size_t r = 0; r < locus.records.size(); ++r) {
    const auto& rec = locus.records[r];
    if (rec.cls != ReidTaiClass::noncanonical) continue;
    if (rec.raw_type.dimension() != pq.factors.size()) throw InvariantError("singularity dimension differs from the model");
    RaySet rays = negative_rays(rec.raw_type);
    MonomialIdeal ideal = minimal_basis(rays, d);
    out.push_back(StalkCondition{r, rec.raw_type, std::move(rays), std::move(ideal), rec.vanishing_orders});
  }
  return out;
}

PlurigenusReport plurigenus_monomial(const ProductQuotientModel& pq, const SingularLocus& locus, int d, std::size_t witness_cap) {
  PlurigenusReport rep;
  rep.d = d;
  rep.invariant_dimension = invariant_dimension(pq, d);
  BucketSearch search(pq, d, stalk_conditions(pq, locus, d), true);
  auto res = run_search(search, witness_cap);
  rep.count = res.count;
  rep.witnesses = std::move(res.witnesses);
  rep.witnesses_truncated = res.truncated;
  rep.exact = pq.exactness && pq.exactness->covers(d);
  if (rep.count < 0 || rep.count > rep.invariant_dimension)
    throw InvariantError("monomial count exceeds the invariant dimension");
  return rep;
}

PlurigenusReport plurigenus_monomial(const ProductQuotientModel& pq, int d, std::size_t witness_cap) {
  return plurigenus_monomial(pq, singular_locus(pq), d, witness_cap);
}

bool is_admissible_monomial(const ProductQuotientModel& pq, const SingularLocus& locus, int d, const ProductMonomial& m) {
  if (m.size() != pq.factors.size()) return false;
  Character total = pq.group.trivial_character();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& f = pq.factors[i];
    int deg = 0;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (f.curve.max_exponents[j] >= 0 && m[i][j] > f.curve.max_exponents[j]) return false;
      deg += m[i][j] * f.curve.weights[j];
    }
    if (deg != f.curve.canonical_degree * d) return false;
    total = pq.group.add(total, monomial_character(f.action, m[i]));
  }
  if (!total.is_trivial()) return false;
  for (const auto& rec : locus.records) {
    const int mm = rec.raw_type.order();
    std::vector<int> local;
    for (std::size_t i = 0; i < m.size(); ++i) local.push_back(dot(rec.vanishing_orders[i], m[i]));
    // Each group element j whose age is below 1 gives a divisor with
    // negative discrepancy; the monomial must vanish to the required order.
    for (int j = 1; j < mm; ++j) {
      std::int64_t s = 0, weighted = 0;
      for (std::size_t i = 0; i < local.size(); ++i) {
        const std::int64_t res = mod(static_cast<std::int64_t>(j) * rec.raw_type.weights()[i], mm);
        s += res;
        weighted += res * local[i];
      }
      if (s >= mm) continue;
      // valuation of the monomial (in units of 1/m) against d * (1 - age)
      if (weighted + static_cast<std::int64_t>(d) * s < static_cast<std::int64_t>(d) * mm) return false;
    }
  }
  return true;
}

std::vector<ProductMonomial> invariant_monomials(const ProductQuotientModel& pq, int d) {
  BucketSearch search(pq, d, {}, false);
  return run_search(search, static_cast<std::size_t>(-1)).witnesses;
}

std::int64_t codimension_check(const ProductQuotientModel& pq) {
  const auto rep = plurigenus_monomial(pq, 2, 0);
  return rep.invariant_dimension - rep.count;
}

VolumeReport volume_and_minimality(std::int64_t p_g, std::int64_t q, std::int64_t p2, std::optional<std::int64_t> p3,
                                   const Rational& k2_resolved) {
  if (k2_resolved <= 0 || p2 == 0) throw ValidationError("volume formula needs K^2 > 0 and P_2 != 0");
  VolumeReport v;
  v.vol = p2 + q - p_g - 1;
  if (p3 && (*p3 - p2) != 2 * v.vol) throw ValidationError("P_3 - P_2 disagrees with twice the volume");
  v.r = make_rational(v.vol) - k2_resolved;
  if (v.r < 0) throw ValidationError("volume is smaller than K^2 of the resolution");
  v.minimal = v.r == 0;
  return v;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_cy: return "NOT_CY";
    case Verdict::consistent_cy: return "CONSISTENT_CY";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::not_applicable: return "NOT_APPLICABLE";
  }
  return "?";
}

std::optional<std::array<std::size_t, 3>> private_variable_triple(const std::vector<ProductMonomial>& witnesses) {
  const std::size_t n = witnesses.size();
  auto has_private = [&](std::size_t a, std::size_t b, std::size_t c) {
    const auto& w = witnesses[a];
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w[i].size(); ++j)
        if (w[i][j] > 0 && witnesses[b][i][j] == 0 && witnesses[c][i][j] == 0) return true;
    return false;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!has_private(a, b, b) || !has_private(b, a, a)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (has_private(a, b, c) && has_private(b, a, c) && has_private(c, a, b)) return std::array{a, b, c};
    }
  return std::nullopt;
}

CyVerdict cy_verdict(const ProductQuotientModel& pq, int d_max) {
  if (d_max < 1) throw UsageError("d_max must be at least 1");
  CyVerdict v;
  v.d_max = d_max;
  if (pq.dimension() != 3 || !numerical_cy(pq)) return v;
  const auto locus = singular_locus(pq);
  bool all_exact_one = true;
  for (int d = 1; d <= d_max; ++d) {
    v.reports.push_back(plurigenus_monomial(pq, locus, d));
    const auto& rep = v.reports.back();
    if (rep.count >= 2) {
      v.verdict = Verdict::not_cy;
      v.certificate_degree = d;
      if (const auto t = private_variable_triple(rep.witnesses)) {
        v.kodaira_at_least_two = true;
        for (std::size_t i : *t) v.kodaira_witnesses.push_back(rep.witnesses[i]);
      }
      return v;
    }
    if (rep.count != 1 || !rep.exact) all_exact_one = false;
  }
  v.verdict = all_exact_one ? Verdict::consistent_cy : Verdict::inconclusive;
  return v;
}

SurfaceRow surface_report(const ProductQuotientModel& pq) {
  if (pq.dimension() != 2) throw UsageError("surface report applies to surfaces");
  SurfaceRow row;
  const auto locus = singular_locus(pq);
  const auto inv = hodge_invariants(pq);
  const auto ks = k_squared(pq, locus);
  const auto rep = plurigenus_monomial(pq, locus, 2, 0);
  row.genus = pq.factors[0].curve.genus;
  row.k2 = ks.k2;
  row.k2_resolved = ks.k2_resolved;
  row.p_g = inv.p_g;
  row.q = inv.q[0];
  row.chi = *inv.chi;
  row.h0_2k = rep.invariant_dimension;
  row.p2 = rep.count;
  row.p2_exact = rep.exact;
  const auto vol = volume_and_minimality(row.p_g, row.q, row.p2, std::nullopt, row.k2_resolved);
  row.vol = vol.vol;
  row.vol_minus_k2 = vol.r;
  return row;
}

std::string monomial_string(const ProductQuotientModel& pq, const ProductMonomial& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      if (!first) out << '*';
      first = false;
      out << pq.factors[i].curve.generators[j] << (i + 1);
      if (m[i][j] > 1) out << '^' << m[i][j];
    }
  if (first) out << '1';
  return out.str();
}

}  // namespace pqv
