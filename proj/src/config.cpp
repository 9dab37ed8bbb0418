#include "pqv/config.hpp"

#include <fstream>
#include <sstream>

#include "pqv/errors.hpp"

namespace pqv {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("field '") + key + "': " + e.what());
  }
}

Json cyclotomic_list(const std::vector<Cyclotomic>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::vector<Cyclotomic> parse_cyclotomic_list(const Json& j, const char* key) {
  std::vector<Cyclotomic> out;
  for (const auto& s : get<std::vector<std::string>>(j, key)) out.push_back(parse_cyclotomic(s));
  return out;
}

Json curve_to_json(const WeightedCurve& c) {
  Json eq = Json::array();
  for (const auto& t : c.equation) eq.push_back(Json{{"coeff", t.coeff.str()}, {"exponents", t.exps}});
  return Json{{"generators", c.generators},     {"weights", c.weights}, {"equation", eq},
              {"genus", c.genus},               {"canonical_degree", c.canonical_degree},
              {"max_exponents", c.max_exponents}};
}

WeightedCurve curve_from_json(const Json& j) {
  WeightedCurve c;
  c.generators = get<std::vector<std::string>>(j, "generators");
  c.weights = get<std::vector<int>>(j, "weights");
  for (const auto& t : get<Json>(j, "equation"))
    c.equation.push_back({parse_cyclotomic(get<std::string>(t, "coeff")), get<std::vector<int>>(t, "exponents")});
  c.genus = get<int>(j, "genus");
  c.canonical_degree = get<int>(j, "canonical_degree");
  c.max_exponents = get<std::vector<int>>(j, "max_exponents");
  return c;
}

Json action_to_json(const ActionSpec& a) {
  return Json{{"section_lift", a.section_lift},
              {"section_weights", a.section_weights},
              {"point_conductor", a.point_conductor},
              {"point_exponents", a.point_exponents}};
}

ActionSpec action_from_json(const Json& j, const AbelianGroup& g) {
  ActionSpec a;
  a.group = g;
  a.section_lift = get<std::vector<std::int64_t>>(j, "section_lift");
  a.section_weights = get<std::vector<std::vector<std::int64_t>>>(j, "section_weights");
  a.point_conductor = get<int>(j, "point_conductor");
  a.point_exponents = get<std::vector<std::vector<std::int64_t>>>(j, "point_exponents");
  return a;
}

Json orbit_to_json(const MarkedOrbit& o) {
  return Json{{"label", o.label},
              {"representative", cyclotomic_list(o.representative)},
              {"stabilizer", o.stabilizer.exps},
              {"stabilizer_order", o.stabilizer_order},
              {"rotation", o.rotation},
              {"orbit_size", o.orbit_size},
              {"multiplicity", o.multiplicity},
              {"vanishing_orders", o.vanishing_orders}};
}

MarkedOrbit orbit_from_json(const Json& j) {
  MarkedOrbit o;
  o.label = get<std::string>(j, "label");
  o.representative = parse_cyclotomic_list(j, "representative");
  o.stabilizer.exps = get<std::vector<std::int64_t>>(j, "stabilizer");
  o.stabilizer_order = get<std::int64_t>(j, "stabilizer_order");
  o.rotation = get<std::int64_t>(j, "rotation");
  o.orbit_size = get<std::int64_t>(j, "orbit_size");
  o.multiplicity = j.contains("multiplicity") ? get<std::int64_t>(j, "multiplicity") : 1;
  o.vanishing_orders = get<std::vector<int>>(j, "vanishing_orders");
  return o;
}

void check_version(const Json& doc) {
  if (!doc.is_object()) throw UsageError("document must be an object");
  const int v = get<int>(doc, "format_version");
  if (v != kFormatVersion) throw UsageError("unsupported format_version " + std::to_string(v));
}

void check_shapes(const CurveFactor& f, std::size_t rank) {
  const std::size_t n = f.curve.generators.size();
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw UsageError(what + " has the wrong length");
  };
  need(f.curve.weights.size() == n, "curve weights");
  need(f.curve.max_exponents.size() == n, "max_exponents");
  for (const auto& t : f.curve.equation) need(t.exps.size() == n, "equation term");
  need(f.action.section_lift.size() == rank, "section_lift");
  need(f.action.section_weights.size() == n, "section_weights");
  for (const auto& row : f.action.section_weights) need(row.size() == rank, "section_weights row");
  need(f.action.point_exponents.size() == rank, "point_exponents");
  for (const auto& row : f.action.point_exponents) need(row.size() == n, "point_exponents row");
  for (const auto& o : f.orbits) {
    need(o.representative.size() == n, "orbit " + o.label + ": representative");
    need(o.vanishing_orders.size() == n, "orbit " + o.label + ": vanishing_orders");
  }
}

}  // namespace

Json model_to_json(const ProductQuotientModel& pq) {
  Json factors = Json::array();
  for (const auto& f : pq.factors) {
    Json orbits = Json::array();
    for (const auto& o : f.orbits) orbits.push_back(orbit_to_json(o));
    factors.push_back(Json{{"curve", curve_to_json(f.curve)}, {"action", action_to_json(f.action)}, {"orbits", orbits}});
  }
  Json doc{{"format_version", kFormatVersion}, {"name", pq.name}, {"group", pq.group.orders()}, {"factors", factors}};
  if (pq.exactness) {
    Json ex{{"citation", pq.exactness->citation}};
    if (pq.exactness->all_degrees) ex["degrees"] = "all";
    else ex["degrees"] = pq.exactness->degrees;
    doc["exactness"] = ex;
  }
  return doc;
}

ProductQuotientModel model_from_json(const Json& doc) {
  check_version(doc);
  ProductQuotientModel pq;
  pq.name = doc.contains("name") ? get<std::string>(doc, "name") : std::string("model");
  const auto orders = get<std::vector<std::int64_t>>(doc, "group");
  if (orders.empty()) throw UsageError("group needs at least one cyclic factor");
  for (auto o : orders)
    if (o < 1) throw UsageError("cyclic orders must be positive");
  pq.group = AbelianGroup(orders);
  for (const auto& f : get<Json>(doc, "factors")) {
    CurveFactor cf;
    cf.curve = curve_from_json(get<Json>(f, "curve"));
    cf.action = action_from_json(get<Json>(f, "action"), pq.group);
    for (const auto& o : get<Json>(f, "orbits")) {
      cf.orbits.push_back(orbit_from_json(o));
      if (cf.orbits.back().stabilizer.exps.size() != orders.size())
        throw UsageError("orbit " + cf.orbits.back().label + ": stabilizer has the wrong length");
    }
    check_shapes(cf, orders.size());
    pq.factors.push_back(std::move(cf));
  }
  if (doc.contains("exactness")) {
    const auto& ex = doc.at("exactness");
    ExactnessAttestation a;
    a.citation = get<std::string>(ex, "citation");
    const auto& deg = ex.at("degrees");
    if (deg.is_string()) {
      if (deg.get<std::string>() != "all") throw UsageError("exactness degrees must be \"all\" or a list");
      a.all_degrees = true;
    } else {
      a.degrees = get<std::vector<int>>(ex, "degrees");
    }
    pq.exactness = a;
  }
  return pq;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ProductQuotientModel load_model(const std::string& path) {
  try {
    return model_from_json(read_json_file(path));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void save_model(const ProductQuotientModel& pq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << model_to_json(pq).dump(2) << '\n';
}

std::vector<NamedGroup> groups_from_json(const Json& doc) {
  check_version(doc);
  std::vector<NamedGroup> out;
  for (const auto& g : get<Json>(doc, "groups")) {
    const auto name = get<std::string>(g, "name");
    if (g.contains("cyclic")) {
      const AbelianGroup a(get<std::vector<std::int64_t>>(g, "cyclic"));
      if (a.order() > static_cast<std::int64_t>(CayleyGroup::kMaxOrder)) throw UsageError(name + ": group too large");
      out.push_back(NamedGroup{name, a.to_cayley(), a});
    } else if (g.contains("permutations")) {
      out.push_back(NamedGroup{name, CayleyGroup::from_permutations(get<std::vector<std::vector<int>>>(g, "permutations")), {}});
    } else if (g.contains("table")) {
      out.push_back(NamedGroup{name, CayleyGroup(get<std::vector<std::vector<int>>>(g, "table"), get<int>(g, "identity")), {}});
    } else {
      throw UsageError(name + ": group needs 'cyclic', 'permutations' or 'table'");
    }
  }
  return out;
}

std::vector<NamedGroup> load_groups(const std::string& path) {
  try {
    return groups_from_json(read_json_file(path));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace pqv
