#include "pqv/report.hpp"

#include <iomanip>
#include <sstream>

#include "pqv/toric.hpp"

namespace pqv {

std::string rational_string(const Rational& q) { return q.str(); }

namespace {

Json monomial_json(const ProductQuotientModel& pq, const ProductMonomial& m) {
  return Json{{"exponents", m}, {"text", monomial_string(pq, m)}};
}

Json type_json(const TypeTuple& t) {
  Json factors = Json::array();
  for (const auto& f : t.factors) factors.push_back(Json{{"genus", f.genus}, {"type", f.type}});
  return Json{{"n", t.n}, {"factors", factors}};
}

std::string exps_string(const std::vector<int>& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

}  // namespace

Json ideal_report(const CyclicSingularityType& sing, int k) {
  const auto rays = negative_rays(sing);
  Json r = Json::array();
  for (const auto& ray : rays.rays) r.push_back(Json{{"w", ray.w}, {"u", ray.u}});
  const auto ideal = minimal_basis(rays, k);
  Json out{{"singularity", sing.str()},
           {"class", to_string(reid_tai_class(sing))},
           {"k", k},
           {"rays", r},
           {"generator_count", ideal.generators().size()},
           {"generators", ideal.generators()}};
  if (!rays.rays.empty()) {
    out["box_multipliers"] = box_multipliers(rays);
    const auto st = stabilization_exponent(rays);
    Json verts = Json::array();
    for (const auto& v : st.vertices) {
      Json p = Json::array();
      for (const auto& x : v) p.push_back(rational_string(x));
      verts.push_back(p);
    }
    out["stabilization"] = Json{{"s_prime", st.s_prime}, {"s", st.s}, {"vertices", verts}};
  }
  return out;
}

Json invariants_report(const ProductQuotientModel& pq) {
  const auto inv = hodge_invariants(pq);
  Json out{{"p_g", inv.p_g}, {"q", inv.q}};
  if (inv.chi) out["chi"] = *inv.chi;
  if (pq.dimension() == 3) out["numerical_cy"] = numerical_cy(inv, 3);
  return out;
}

Json singular_locus_report(const ProductQuotientModel& pq, const SingularLocus& locus) {
  Json recs = Json::array();
  for (const auto& r : locus.records) {
    Json orbits = Json::array();
    for (std::size_t i = 0; i < r.orbits.size(); ++i) orbits.push_back(pq.factors[i].orbits[r.orbits[i]].label);
    recs.push_back(Json{{"orbits", orbits},
                        {"generator", r.generator.exps},
                        {"order", r.order},
                        {"raw_type", r.raw_type.str()},
                        {"type", r.canonical_type.str()},
                        {"count", r.count},
                        {"class", to_string(r.cls)},
                        {"vanishing_orders", r.vanishing_orders}});
  }
  Json basket = Json::array();
  for (const auto& b : locus.basket) basket.push_back(Json{{"type", b.type.str()}, {"count", b.count}, {"class", to_string(b.cls)}});
  return Json{{"records", recs}, {"basket", basket}, {"total", locus.total()}, {"noncanonical", locus.has_noncanonical()}};
}

Json plurigenus_report(const ProductQuotientModel& pq, const PlurigenusReport& rep) {
  Json w = Json::array();
  for (const auto& m : rep.witnesses) w.push_back(monomial_json(pq, m));
  return Json{{"d", rep.d},
              {"invariant_dimension", rep.invariant_dimension},
              {"count", rep.count},
              {"exact", rep.exact},
              {"witnesses", w},
              {"witnesses_truncated", rep.witnesses_truncated}};
}

Json verdict_report(const ProductQuotientModel& pq, const CyVerdict& v) {
  Json out{{"verdict", to_string(v.verdict)}, {"d_max", v.d_max}};
  if (v.verdict == Verdict::consistent_cy) out["label"] = "CONSISTENT_CY(" + std::to_string(v.d_max) + ")";
  else out["label"] = to_string(v.verdict);
  if (v.certificate_degree) out["certificate_degree"] = *v.certificate_degree;
  out["kodaira_at_least_two"] = v.kodaira_at_least_two;
  Json kw = Json::array();
  for (const auto& m : v.kodaira_witnesses) kw.push_back(monomial_json(pq, m));
  out["kodaira_witnesses"] = kw;
  Json reps = Json::array();
  for (const auto& r : v.reports) reps.push_back(plurigenus_report(pq, r));
  out["plurigenera"] = reps;
  return out;
}

Json surface_row_report(const SurfaceRow& row) {
  return Json{{"g", row.genus},
              {"K2", rational_string(row.k2)},
              {"K2_resolved", rational_string(row.k2_resolved)},
              {"p_g", row.p_g},
              {"q", row.q},
              {"chi", row.chi},
              {"h0_2K_invariant", row.h0_2k},
              {"P2", row.p2},
              {"P2_exact", row.p2_exact},
              {"vol", row.vol},
              {"vol_minus_K2_resolved", rational_string(row.vol_minus_k2)}};
}

Json classify_report(const std::vector<TypeTuple>& tuples, const std::vector<CandidateRecord>* candidates) {
  Json ts = Json::array();
  for (const auto& t : tuples) ts.push_back(type_json(t));
  Json out{{"tuple_count", tuples.size()}, {"tuples", ts}};
  if (candidates) {
    Json cs = Json::array();
    for (const auto& c : *candidates)
      cs.push_back(Json{{"group", c.group}, {"types", type_json(c.types)}, {"witnesses", c.witnesses}});
    out["candidates"] = cs;
  }
  return out;
}

std::string render_table(const Json& report) {
  std::ostringstream out;
  const std::string cmd = report.value("command", "");
  const Json& r = report.at("result");
  if (cmd == "ideal") {
    out << "singularity " << r["singularity"].get<std::string>() << "  class " << r["class"].get<std::string>() << "  k "
        << r["k"] << "\n";
    out << "negative rays:\n";
    for (const auto& ray : r["rays"]) out << "  w " << exps_string(ray["w"].get<std::vector<int>>()) << "  u " << ray["u"] << "\n";
    out << r["generator_count"] << " minimal generators:\n";
    for (const auto& g : r["generators"]) out << "  " << exps_string(g.get<std::vector<int>>()) << "\n";
    if (r.contains("stabilization"))
      out << "stabilization exponent s' = " << r["stabilization"]["s_prime"] << ", s = " << r["stabilization"]["s"] << "\n";
  } else if (cmd == "invariants") {
    out << "p_g " << r["p_g"];
    const auto q = r["q"].get<std::vector<std::int64_t>>();
    for (std::size_t i = 0; i < q.size(); ++i) out << "  q_" << i + 1 << " " << q[i];
    if (r.contains("chi")) out << "  chi " << r["chi"];
    if (r.contains("numerical_cy")) out << "  numerical CY " << (r["numerical_cy"].get<bool>() ? "yes" : "no");
    out << "\n";
  } else if (cmd == "singular-locus") {
    out << std::left << std::setw(16) << "type" << std::setw(8) << "count" << "class\n";
    for (const auto& b : r["basket"])
      out << std::setw(16) << b["type"].get<std::string>() << std::setw(8) << b["count"].get<std::int64_t>()
          << b["class"].get<std::string>() << "\n";
    out << "total " << r["total"] << "\n";
  } else if (cmd == "plurigenus") {
    out << std::left << std::setw(6) << "d" << std::setw(14) << "h0(dK)^G" << std::setw(10) << "count" << "exact\n";
    for (const auto& p : r["plurigenera"])
      out << std::setw(6) << p["d"].get<int>() << std::setw(14) << p["invariant_dimension"].get<std::int64_t>() << std::setw(10)
          << p["count"].get<std::int64_t>() << (p["exact"].get<bool>() ? "yes" : "lower bound") << "\n";
  } else if (cmd == "verdict") {
    out << r["label"].get<std::string>();
    if (r.contains("certificate_degree")) out << "  (two or more monomial sections in degree " << r["certificate_degree"] << ")";
    if (r["kodaira_at_least_two"].get<bool>()) out << "  kappa >= 2";
    out << "\n";
    for (const auto& w : r["kodaira_witnesses"]) out << "  " << w["text"].get<std::string>() << "\n";
  } else if (cmd == "surface-report") {
    out << "g K2 K2_res p_g chi h0(2K)^G P2 vol vol-K2_res\n";
    out << r["g"] << ' ' << r["K2"].get<std::string>() << ' ' << r["K2_resolved"].get<std::string>() << ' ' << r["p_g"] << ' '
        << r["chi"] << ' ' << r["h0_2K_invariant"] << ' ' << r["P2"] << ' ' << r["vol"] << ' '
        << r["vol_minus_K2_resolved"].get<std::string>() << "\n";
  } else if (cmd == "classify") {
    for (const auto& t : r["tuples"]) {
      out << "n=" << t["n"];
      for (const auto& f : t["factors"]) out << "  g=" << f["genus"] << " " << to_string(f["type"].get<BranchType>());
      out << "\n";
    }
    if (r.contains("candidates")) {
      out << "candidates:\n";
      for (const auto& c : r["candidates"]) {
        out << "  " << c["group"].get<std::string>();
        for (const auto& f : c["types"]["factors"]) out << " " << to_string(f["type"].get<BranchType>());
        out << "\n";
      }
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace pqv
