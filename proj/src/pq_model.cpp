#include "pqv/pq_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pqv/errors.hpp"

namespace pqv {

bool ExactnessAttestation::covers(int d) const {
  return all_degrees || std::find(degrees.begin(), degrees.end(), d) != degrees.end();
}

namespace {

std::int64_t negate_index(const AbelianGroup& group, std::int64_t i) {
  Character c = group.character_from_index(i);
  for (std::size_t j = 0; j < c.weights.size(); ++j) c.weights[j] = mod(-c.weights[j], group.orders()[j]);
  return group.character_index(c);
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   const AbelianGroup& group) {
  std::vector<std::int64_t> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Character ci = group.character_from_index(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Character cj = group.character_from_index(static_cast<std::int64_t>(j));
      out[static_cast<std::size_t>(group.character_index(group.add(ci, cj)))] += a[i] * b[j];
    }
  }
  return out;
}

// Elements fixing some point of the factor: the union of the cyclic
// stabilizers of the marked orbits.
std::vector<bool> elements_with_fixed_points(const CurveFactor& f, const AbelianGroup& group) {
  std::vector<bool> has(static_cast<std::size_t>(group.order()), false);
  for (const auto& o : f.orbits)
    for (const auto& x : group.cyclic_subgroup(o.stabilizer)) has[static_cast<std::size_t>(group.index(x))] = true;
  has[static_cast<std::size_t>(group.index(group.identity()))] = false;
  return has;
}

}  // namespace

std::int64_t quotient_genus(const CurveFactor& factor, const AbelianGroup& group) {
  std::int64_t n = 0;
  for (const auto& a : canonical_monomials(factor.curve, 1))
    if (monomial_character(factor.action, a).is_trivial()) ++n;
  (void)group;
  return n;
}

bool section_action_faithful(const CurveFactor& factor, const AbelianGroup& group) {
  // The characters occurring in H^0(K) must generate the character group.
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  std::vector<Character> gens;
  std::vector<std::int64_t> members{group.character_index(group.trivial_character())};
  in[static_cast<std::size_t>(members[0])] = true;
  for (const auto& a : canonical_monomials(factor.curve, 1)) {
    const Character c = monomial_character(factor.action, a);
    if (in[static_cast<std::size_t>(group.character_index(c))]) continue;
    gens.push_back(c);
    // Closure of the current subgroup under the new generator set.
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Character x = group.character_from_index(members[k]);
      for (const auto& g : gens) {
        const auto idx = group.character_index(group.add(x, g));
        if (!in[static_cast<std::size_t>(idx)]) {
          in[static_cast<std::size_t>(idx)] = true;
          members.push_back(idx);
        }
      }
    }
  }
  return static_cast<std::int64_t>(members.size()) == group.order();
}

void validate_model(const ProductQuotientModel& pq, bool series) {
  if (pq.factors.size() < 2) throw ValidationError("a product-quotient model needs at least two factors");
  std::optional<int> sign;
  for (std::size_t i = 0; i < pq.factors.size(); ++i) {
    const auto& f = pq.factors[i];
    const std::string where = "factor " + std::to_string(i + 1) + ": ";
    try {
      if (f.action.group.orders() != pq.group.orders()) throw ValidationError("group differs from the model group");
      if (f.curve.genus < 2) throw ValidationError("genus must be at least 2");
      check_curve_action(f.curve, f.action);
      if (!section_action_faithful(f, pq.group)) throw ValidationError("action on canonical sections is not faithful");
      const int s = section_point_sign(f.curve, f.action);
      if (s == 0) throw ValidationError("section and point actions are incompatible");
      if (s != 2) {
        if (sign && *sign != s) throw ValidationError("section/point convention differs from the previous factors");
        sign = s;
      }
      // Riemann-Hurwitz over C/G, whose genus is read off the invariant canonical sections.
      const std::int64_t g0 = quotient_genus(f, pq.group);
      std::int64_t ramification = 0;
      for (const auto& o : f.orbits) {
        if (o.multiplicity < 1 || o.orbit_size < 1) throw ValidationError(o.label + ": orbit size and multiplicity must be positive");
        ramification += o.multiplicity * (pq.group.order() - o.orbit_size);
      }
      const std::int64_t lhs = 2 * f.curve.genus - 2;
      const std::int64_t rhs = pq.group.order() * (2 * g0 - 2) + ramification;
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "marked orbits do not account for the ramification (Riemann-Hurwitz gives " << rhs << ", expected " << lhs << ")";
        throw ValidationError(msg.str());
      }
      if (series)
        for (const auto& o : f.orbits) {
          const auto v = validate_marked_orbit(f.curve, f.action, o);
          if (!v.ok) throw ValidationError(v.problems.front());
        }
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
}

QuasiEtaleResult quasi_etale_check(const ProductQuotientModel& pq) {
  std::vector<std::vector<bool>> fixing;
  for (const auto& f : pq.factors) fixing.push_back(elements_with_fixed_points(f, pq.group));
  for (const auto& h : pq.group.elements()) {
    if (h == pq.group.identity()) continue;
    const auto idx = static_cast<std::size_t>(pq.group.index(h));
    bool some_trivial = false, all_nonempty = true;
    std::size_t trivial_on = 0;
    for (std::size_t i = 0; i < pq.factors.size(); ++i) {
      const bool trivial = acts_trivially(pq.factors[i].curve, pq.factors[i].action, h);
      if (trivial && !some_trivial) trivial_on = i;
      some_trivial = some_trivial || trivial;
      if (!trivial && !fixing[i][idx]) all_nonempty = false;
    }
    if (some_trivial && all_nonempty) {
      QuasiEtaleResult r;
      r.ok = false;
      r.offender = h;
      r.reason = pq.group.str(h) + " acts trivially on factor " + std::to_string(trivial_on + 1) +
                 " and has fixed points on the others";
      return r;
    }
  }
  return {};
}

std::int64_t SingularLocus::total() const {
  std::int64_t n = 0;
  for (const auto& b : basket) n += b.count;
  return n;
}

bool SingularLocus::has_noncanonical() const {
  return std::any_of(basket.begin(), basket.end(), [](const BasketEntry& b) { return b.cls == ReidTaiClass::noncanonical; });
}

SingularLocus singular_locus(const ProductQuotientModel& pq) {
  const auto& G = pq.group;
  const std::size_t k = pq.factors.size();
  SingularLocus out;
  std::vector<std::size_t> pick(k, 0);
  for (const auto& f : pq.factors)
    if (f.orbits.empty()) return out;
  for (;;) {
    std::vector<GroupElement> stabs;
    for (std::size_t i = 0; i < k; ++i) stabs.push_back(pq.factors[i].orbits[pick[i]].stabilizer);
    const GroupElement h = G.cyclic_intersection(stabs);
    const std::int64_t m = G.element_order(h);
    if (m > 1) {
      std::vector<int> weights;
      std::int64_t count_num = m;
      SingularOrbitRecord rec{pick, h, m, CyclicSingularityType(2, {1, 1}), CyclicSingularityType(2, {1, 1}), 0,
                              ReidTaiClass::terminal, {}};
      for (std::size_t i = 0; i < k; ++i) {
        const auto& o = pq.factors[i].orbits[pick[i]];
        const auto j = G.discrete_log(o.stabilizer, h);
        if (!j) throw InvariantError("stabilizer intersection is not a power of " + o.label);
        const std::int64_t t = o.stabilizer_order / m;
        if (o.stabilizer_order % m != 0 || *j % t != 0) throw InvariantError("inconsistent stabilizer orders at " + o.label);
        weights.push_back(static_cast<int>(mod((*j / t) * o.rotation, m)));
        count_num *= o.orbit_size * o.multiplicity;
        rec.vanishing_orders.push_back(o.vanishing_orders);
      }
      if (count_num % G.order() != 0) throw InvariantError("non-integral point count in the singular locus");
      rec.count = count_num / G.order();
      rec.raw_type = CyclicSingularityType(static_cast<int>(m), weights);
      rec.canonical_type = canonical_form(rec.raw_type);
      rec.cls = reid_tai_class(rec.raw_type);
      out.records.push_back(std::move(rec));
    }
    // Odometer over the tuples of marked orbits.
    std::size_t i = k;
    bool done = false;
    while (true) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (++pick[i] < pq.factors[i].orbits.size()) break;
      pick[i] = 0;
    }
    if (done) break;
  }
  std::map<CyclicSingularityType, BasketEntry> agg;
  for (const auto& r : out.records) {
    auto [it, fresh] = agg.try_emplace(r.canonical_type, BasketEntry{r.canonical_type, 0, r.cls});
    it->second.count += r.count;
  }
  for (auto& [type, entry] : agg) out.basket.push_back(entry);
  return out;
}

std::vector<std::int64_t> character_histogram(const CurveFactor& factor, const AbelianGroup& group, int d) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(group.order()), 0);
  for (const auto& a : canonical_monomials(factor.curve, d))
    ++h[static_cast<std::size_t>(group.character_index(monomial_character(factor.action, a)))];
  return h;
}

std::int64_t invariant_count(const std::vector<std::vector<std::int64_t>>& histograms, const AbelianGroup& group) {
  if (histograms.empty()) return 1;
  if (histograms.size() == 1) return histograms[0][static_cast<std::size_t>(group.character_index(group.trivial_character()))];
  std::vector<std::int64_t> acc = histograms[0];
  for (std::size_t i = 1; i + 1 < histograms.size(); ++i) acc = convolve(acc, histograms[i], group);
  const auto& last = histograms.back();
  std::int64_t n = 0;
  for (std::size_t c = 0; c < acc.size(); ++c)
    if (acc[c] != 0) n += acc[c] * last[static_cast<std::size_t>(negate_index(group, static_cast<std::int64_t>(c)))];
  return n;
}

InvariantsRecord hodge_invariants(const ProductQuotientModel& pq) {
  const std::size_t k = pq.factors.size();
  std::vector<std::vector<std::int64_t>> hist;
  for (const auto& f : pq.factors) hist.push_back(character_histogram(f, pq.group, 1));
  InvariantsRecord r;
  r.q.assign(k - 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(hist[i]);
    const std::int64_t n = invariant_count(sub, pq.group);
    if (sub.size() == k) r.p_g = n;
    else r.q[sub.size() - 1] += n;
  }
  if (k == 2) r.chi = 1 - r.q[0] + r.p_g;
  return r;
}

std::int64_t invariant_dimension(const ProductQuotientModel& pq, int d) {
  if (d < 1) throw UsageError("degree must be at least 1");
  std::vector<std::vector<std::int64_t>> hist;
  for (const auto& f : pq.factors) hist.push_back(character_histogram(f, pq.group, d));
  return invariant_count(hist, pq.group);
}

KSquared k_squared(const ProductQuotientModel& pq, const SingularLocus& locus) {
  if (pq.factors.size() != 2) throw UsageError("K^2 is computed for surfaces only");
  KSquared r;
  r.k2 = make_rational(8 * (pq.factors[0].curve.genus - 1) * (pq.factors[1].curve.genus - 1), pq.group.order());
  if (!is_integer(r.k2)) throw InvariantError("K^2 of the quotient model is not an integer");
  r.k2_resolved = r.k2;
  for (const auto& b : locus.basket) {
    const int m = b.type.order();
    const auto& w = b.type.weights();
    if (w[0] == 1 && w[1] == m - 1) continue;  // A-type: crepant resolution
    if (w[0] == 1 && w[1] == 1) {
      r.k2_resolved -= make_rational(b.count * (m - 2) * (m - 2), m);
      continue;
    }
    throw ValidationError("unsupported singularity " + b.type.str() + " in the basket for K^2");
  }
  return r;
}

bool numerical_cy(const InvariantsRecord& inv, std::size_t dimension) {
  if (dimension != 3) throw UsageError("numerical Calabi-Yau test applies to threefolds");
  return inv.p_g == 1 && inv.q.size() == 2 && inv.q[0] == 0 && inv.q[1] == 0;
}

bool numerical_cy(const ProductQuotientModel& pq) { return numerical_cy(hodge_invariants(pq), pq.dimension()); }

}  // namespace pqv
