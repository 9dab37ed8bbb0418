#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "pqv/config.hpp"
#include "pqv/errors.hpp"
#include "pqv/fixtures.hpp"
#include "pqv/report.hpp"

using namespace pqv;

namespace {

const std::string kFixtures = PQV_FIXTURE_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PQV_TOOL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  const auto r = run("--json " + args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pqv_test_" + name);
}

}  // namespace

TEST_CASE("model documents round-trip") {
  for (const auto& pq : {fixtures::z6_cy3(), fixtures::z8_fake_cy(), fixtures::fermat(4, 4)}) {
    const auto doc = model_to_json(pq);
    CHECK(doc["format_version"] == kFormatVersion);
    const auto back = model_from_json(doc);
    CHECK(model_to_json(back) == doc);
    CHECK(back.group.orders() == pq.group.orders());
    CHECK(back.exactness.has_value() == pq.exactness.has_value());
    const auto path = temp_path(pq.name + ".cfg");
    save_model(pq, path.string());
    CHECK(model_to_json(load_model(path.string())) == doc);
    std::filesystem::remove(path);
  }
}

TEST_CASE("malformed model documents are usage errors") {
  auto doc = model_to_json(fixtures::z6_cy3());
  auto bad = doc;
  bad["format_version"] = 99;
  CHECK_THROWS_AS(model_from_json(bad), UsageError);
  bad = doc;
  bad.erase("factors");
  CHECK_THROWS_AS(model_from_json(bad), UsageError);
  bad = doc;
  bad["factors"][0]["curve"]["equation"][0]["coeff"] = "z(6";
  CHECK_THROWS_AS(model_from_json(bad), UsageError);
  bad = doc;
  bad["factors"][0]["action"]["section_weights"] = Json::array({Json::array({1})});
  CHECK_THROWS_AS(model_from_json(bad), UsageError);
  CHECK_THROWS_AS(load_model(kFixtures + "/does_not_exist.cfg"), UsageError);
}

TEST_CASE("shipped fixtures equal the built-in models and validate") {
  struct Pair {
    std::string file;
    ProductQuotientModel pq;
  };
  for (const auto& [file, pq] : {Pair{"z6_cy3.cfg", fixtures::z6_cy3()}, Pair{"z8_fake_cy.cfg", fixtures::z8_fake_cy()},
                                 Pair{"fermat_b3.cfg", fixtures::fermat(3, 3)}, Pair{"fermat_b4.cfg", fixtures::fermat(4, 4)}}) {
    INFO(file);
    const auto loaded = load_model(kFixtures + "/" + file);
    CHECK(model_to_json(loaded) == model_to_json(pq));
    CHECK_NOTHROW(validate_model(loaded, true));
    CHECK(quasi_etale_check(loaded).ok);
  }
}

TEST_CASE("group lists") {
  auto wrap = [](Json groups) { return Json{{"format_version", kFormatVersion}, {"groups", std::move(groups)}}; };
  const Json doc = wrap(Json::array({Json{{"name", "Z6"}, {"cyclic", {6}}},
                                     Json{{"name", "S3"}, {"permutations", {{1, 0, 2}, {1, 2, 0}}}},
                                     Json{{"name", "Z2"}, {"table", {{0, 1}, {1, 0}}}, {"identity", 0}}}));
  const auto groups = groups_from_json(doc);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].abelian.has_value());
  CHECK(groups[1].table.order() == 6);
  CHECK_FALSE(groups[1].table.is_abelian());
  CHECK(groups[2].table.order() == 2);
  CHECK_THROWS_AS(groups_from_json(Json::array()), UsageError);
  CHECK_THROWS_AS(groups_from_json(wrap(Json::array({Json{{"name", "bad"}, {"table", {{0, 0}, {1, 0}}}, {"identity", 0}}}))),
                  UsageError);
  CHECK_THROWS_AS(groups_from_json(wrap(Json::array({Json{{"name", "none"}}}))), UsageError);
}

TEST_CASE("ideal command") {
  const auto a = run_json("ideal --sing 6,1,1,1 --k 1");
  CHECK(a["command"] == "ideal");
  CHECK(a["result"]["generator_count"] == 10);
  for (const auto& g : a["result"]["generators"]) CHECK(g[0].get<int>() + g[1].get<int>() + g[2].get<int>() == 3);
  const auto b = run_json("ideal --sing 8,1,1,1 --k 2");
  CHECK(b["result"]["generator_count"] == 66);
  for (const auto& g : b["result"]["generators"]) CHECK(g[0].get<int>() + g[1].get<int>() + g[2].get<int>() == 10);
  const auto c = run_json("ideal --sing 2,1,1,1 --k 5");
  CHECK(c["result"]["generator_count"] == 1);
  CHECK(c["result"]["generators"][0] == Json::array({0, 0, 0}));
  CHECK(c["result"]["class"] == "terminal");
  const auto t = run("ideal --sing 6,1,1,1 --k 1");
  CHECK(t.code == 0);
  CHECK(t.out.find("1/6(1,1,1)") != std::string::npos);
}

TEST_CASE("model commands on the shipped fixtures") {
  const auto v = run_json("model " + kFixtures + "/z6_cy3.cfg verdict --dmax 10");
  CHECK(v["result"]["label"] == "CONSISTENT_CY(10)");
  const auto w = run_json("model " + kFixtures + "/z8_fake_cy.cfg verdict --dmax 2");
  CHECK(w["result"]["verdict"] == "NOT_CY");
  CHECK(w["result"]["kodaira_at_least_two"] == true);
  const auto s = run_json("model " + kFixtures + "/fermat_b3.cfg surface-report");
  const auto& r = s["result"];
  CHECK(r["g"] == 28);
  CHECK(r["K2"] == "72");
  CHECK(r["K2_resolved"] == "71");
  CHECK(r["p_g"] == 9);
  CHECK(r["chi"] == 10);
  CHECK(r["h0_2K_invariant"] == 81);
  CHECK(r["P2"] == 81);
  CHECK(r["vol"] == 71);
  CHECK(r["vol_minus_K2_resolved"] == "0");
  const auto i = run_json("model " + kFixtures + "/z8_fake_cy.cfg invariants");
  CHECK(i["result"]["p_g"] == 1);
  CHECK(i["result"]["numerical_cy"] == true);
  const auto l = run_json("model " + kFixtures + "/z8_fake_cy.cfg singular-locus");
  CHECK(l["result"]["total"] == 44);
  const auto p = run_json("model " + kFixtures + "/z8_fake_cy.cfg plurigenus --d 1..2");
  CHECK(p["result"]["plurigenera"].size() == 2);
  CHECK(p["result"]["plurigenera"][1]["count"] == 3);
}

TEST_CASE("classify command") {
  const auto c = run_json("classify --gmax 2 --r 3");
  bool found = false;
  for (const auto& t : c["result"]["tuples"]) {
    if (t["n"] != 6) continue;
    bool all = true;
    for (const auto& f : t["factors"]) all = all && f["type"] == Json::array({3, 6, 6});
    found = found || all;
  }
  CHECK(found);
  CHECK(run_json("classify --gmax 2 --r 0")["result"]["tuple_count"] == 0);
  const auto groups = temp_path("groups.json");
  {
    std::FILE* f = std::fopen(groups.string().c_str(), "w");
    std::fputs(R"({"format_version": 1, "groups": [{"name": "Z6", "cyclic": [6]}]})", f);
    std::fclose(f);
  }
  const auto g = run_json("classify --gmax 2 --r 3 --groups " + groups.string());
  CHECK(!g["result"]["candidates"].empty());
  std::filesystem::remove(groups);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("ideal --sing 6,2,1,1").code == 2);
  CHECK(run("ideal --sing abc").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("classify --gmax 1").code == 2);
  CHECK(run("classify --gmax 2 --groups /nonexistent/groups.json").code == 2);
  CHECK(run("model /nonexistent/model.cfg invariants").code == 2);
  CHECK(run("model " + kFixtures + "/z6_cy3.cfg plurigenus --d x").code == 2);
  // a structurally valid document whose orbit data is wrong
  auto doc = model_to_json(fixtures::z6_cy3());
  doc["factors"][0]["orbits"][2]["rotation"] = 1;
  const auto path = temp_path("broken.cfg");
  {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs(doc.dump(2).c_str(), f);
    std::fclose(f);
  }
  CHECK(run("model " + path.string() + " invariants").code == 3);
  std::filesystem::remove(path);
  CHECK(run("model " + kFixtures + "/z6_cy3.cfg invariants").code == 0);
}

TEST_CASE("reports are deterministic") {
  for (const std::string args : {"--json model " + kFixtures + "/z8_fake_cy.cfg plurigenus --d 1..3",
                                 "model " + kFixtures + "/fermat_b4.cfg surface-report", std::string("--json classify --gmax 3 --r 3")}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
  const std::string seq = "PQ_THREADS=1 " + std::string(PQV_TOOL) + " --json model " + kFixtures + "/fermat_b4.cfg plurigenus --d 2";
  const std::string par = "PQ_THREADS=4 " + std::string(PQV_TOOL) + " --json model " + kFixtures + "/fermat_b4.cfg plurigenus --d 2";
  auto capture = [](const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
  };
  CHECK(capture(seq) == capture(par));
}

TEST_CASE("fixture export writes a loadable model") {
  const auto path = temp_path("fermat_b5.cfg");
  CHECK(run("fixture fermat --b 5 --out " + path.string()).code == 0);
  CHECK(model_to_json(load_model(path.string())) == model_to_json(fixtures::fermat(5, 5)));
  std::filesystem::remove(path);
  CHECK(run("fixture fermat --b 2").code == 2);
  CHECK(run("fixture nothing").code == 2);
}

TEST_CASE("table rendering of every command") {
  const auto pq = fixtures::z8_fake_cy();
  const auto locus = singular_locus(pq);
  for (const auto& [cmd, result] : {std::pair<std::string, Json>{"invariants", invariants_report(pq)},
                                    {"singular-locus", singular_locus_report(pq, locus)},
                                    {"verdict", verdict_report(pq, cy_verdict(pq, 2))},
                                    {"ideal", ideal_report(CyclicSingularityType(8, {1, 1, 3}), 2)}}) {
    const Json report{{"format_version", kFormatVersion}, {"command", cmd}, {"request", Json::object()}, {"result", result}};
    CHECK(!render_table(report).empty());
  }
  CHECK(rational_string(make_rational(7, 2)) == "7/2");
  CHECK(rational_string(make_rational(-3)) == "-3");
}
