// Command-line front end: ideals of cyclic quotient singularities, model
// reports, branching-data classification and fixture export.
#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "pqv/config.hpp"
#include "pqv/errors.hpp"
#include "pqv/fixtures.hpp"
#include "pqv/report.hpp"

using namespace pqv;

namespace {

struct Output {
  bool json = false;
  bool timings = false;
};

std::pair<int, int> parse_degree_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("degree range must look like A..B");
  }
}

void emit(const std::string& command, Json request, Json result, const Output& out, double seconds) {
  Json report{{"format_version", kFormatVersion}, {"command", command}, {"request", std::move(request)}, {"result", std::move(result)}};
  if (out.timings) report["timings"] = Json{{"seconds", seconds}};
  if (out.json) std::cout << report.dump(2) << '\n';
  else std::cout << render_table(report);
}

ProductQuotientModel checked_model(const std::string& path) {
  auto pq = load_model(path);
  validate_model(pq, true);
  const auto qe = quasi_etale_check(pq);
  if (!qe.ok) throw ValidationError("fixed loci are not isolated: " + qe.reason);
  return pq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pluricanonical systems of product-quotient varieties"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Machine-readable output");
  app.add_flag("--timings", out.timings, "Include wall-clock timings in the report");

  auto* ideal = app.add_subcommand("ideal", "Ideal I_{kD} of a cyclic quotient singularity");
  std::string sing_text;
  int k = 1;
  ideal->add_option("--sing", sing_text, "m,a1,...,an")->required();
  ideal->add_option("--k", k, "Multiple of D")->check(CLI::PositiveNumber);

  auto* model = app.add_subcommand("model", "Reports on a product-quotient model");
  std::string config_path;
  model->add_option("config", config_path, "Model file")->required();
  model->require_subcommand(1);
  model->add_subcommand("invariants", "p_g and irregularities");
  model->add_subcommand("singular-locus", "Singular points and basket");
  auto* pluri = model->add_subcommand("plurigenus", "Monomial plurisections");
  std::string d_range = "1..2";
  pluri->add_option("--d", d_range, "Degree or range A..B");
  auto* verdict = model->add_subcommand("verdict", "Calabi-Yau test for threefolds");
  int d_max = 10;
  verdict->add_option("--dmax", d_max, "Largest degree checked")->check(CLI::PositiveNumber);
  model->add_subcommand("surface-report", "Invariants row of a surface");

  auto* classify = app.add_subcommand("classify", "Admissible branching data");
  int g_max = 2;
  std::optional<int> r_exact;
  std::string groups_path;
  int factors = 3;
  classify->add_option("--gmax", g_max, "Largest genus")->required();
  classify->add_option("--r", r_exact, "Exact number of branch points");
  classify->add_option("--k", factors, "Number of curve factors")->check(CLI::PositiveNumber);
  classify->add_option("--groups", groups_path, "Group list for generating-vector search");

  auto* fixture = app.add_subcommand("fixture", "Write a built-in model file");
  std::string fixture_name;
  int fa = 0, fb = 3;
  std::string fixture_out;
  fixture->add_option("name", fixture_name, "z6_cy3, z8_fake_cy or fermat")->required();
  fixture->add_option("--a", fa, "Fermat parameter a (default a = b)");
  fixture->add_option("--b", fb, "Fermat parameter b");
  fixture->add_option("--out", fixture_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (*ideal) {
      const auto sing = parse_singularity(sing_text);
      auto result = ideal_report(sing, k);
      emit("ideal", Json{{"sing", sing_text}, {"k", k}}, std::move(result), out, elapsed());
    } else if (*model) {
      const auto pq = checked_model(config_path);
      Json request{{"config", config_path}, {"model", pq.name}};
      if (model->got_subcommand("invariants")) {
        emit("invariants", request, invariants_report(pq), out, elapsed());
      } else if (model->got_subcommand("singular-locus")) {
        emit("singular-locus", request, singular_locus_report(pq, singular_locus(pq)), out, elapsed());
      } else if (model->got_subcommand("plurigenus")) {
        const auto [lo, hi] = parse_degree_range(d_range);
        if (lo < 1 || hi < lo) throw UsageError("degree range must satisfy 1 <= A <= B");
        const auto locus = singular_locus(pq);
        Json reps = Json::array();
        for (int d = lo; d <= hi; ++d) reps.push_back(plurigenus_report(pq, plurigenus_monomial(pq, locus, d)));
        request["d"] = d_range;
        emit("plurigenus", request, Json{{"plurigenera", reps}}, out, elapsed());
      } else if (model->got_subcommand("verdict")) {
        request["dmax"] = d_max;
        emit("verdict", request, verdict_report(pq, cy_verdict(pq, d_max)), out, elapsed());
      } else {
        emit("surface-report", request, surface_row_report(surface_report(pq)), out, elapsed());
      }
    } else if (*classify) {
      const auto tuples = enumerate_types(g_max, factors, r_exact);
      Json request{{"gmax", g_max}, {"k", factors}};
      if (r_exact) request["r"] = *r_exact;
      if (!groups_path.empty()) {
        request["groups"] = groups_path;
        const auto groups = load_groups(groups_path);
        const auto cands = classify_candidates(g_max, r_exact, groups, factors);
        emit("classify", request, classify_report(tuples, &cands), out, elapsed());
      } else {
        emit("classify", request, classify_report(tuples, nullptr), out, elapsed());
      }
    } else if (*fixture) {
      ProductQuotientModel pq;
      if (fixture_name == "z6_cy3") pq = fixtures::z6_cy3();
      else if (fixture_name == "z8_fake_cy") pq = fixtures::z8_fake_cy();
      else if (fixture_name == "fermat") pq = fixtures::fermat(fa == 0 ? fb : fa, fb);
      else throw UsageError("unknown fixture " + fixture_name);
      if (fixture_out.empty()) std::cout << model_to_json(pq).dump(2) << '\n';
      else save_model(pq, fixture_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
