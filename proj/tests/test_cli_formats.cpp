#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/grpfile.hpp"
#include "gft/report.hpp"

using namespace gft;

TEST_CASE("group file format") {
  Group g = parse_group_file("degree: 3\ngen: (1 2 3)\ngen: (1 2)\n");
  CHECK(g.degree() == 3);
  CHECK(g.order() == 6);

  Group trivial = parse_group_file("degree: 1\n");
  CHECK(trivial.order() == 1);

  Group with_noise = parse_group_file(
      "# a comment\n\ndegree: 4  # trailing comment\ngen: (1 2)(3 4)\n");
  CHECK(with_noise.order() == 2);
}

TEST_CASE("group file errors carry line numbers") {
  try {
    parse_group_file("degree: 3\ngen: (1 2 2)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_group_file("gen: (1 2)\ndegree: 3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree: 3\ndegree: 4\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree: 3\ngen: (1 4)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree: 3\nbogus: 1\n"), ParseError);
}

TEST_CASE("group file round trip") {
  for (const Group& g : {symmetric_group(4), sl_2_3(), dihedral_group(12)}) {
    Group back = parse_group_file(to_grp_text(g));
    CHECK(back.degree() == g.degree());
    CHECK(back.same_group(g));
  }
}

namespace {

std::vector<CatalogEntry> small_catalog() {
  std::vector<CatalogEntry> cat;
  for (const auto& e : builtin_catalog())
    if (e.name == "C6" || e.name == "S3" || e.name == "D8" || e.name == "S3xC2")
      cat.push_back(e);
  return cat;
}

}  // namespace

TEST_CASE("suite names are validated") {
  RunOptions opts;
  opts.suites = {"no-such-suite"};
  CHECK_THROWS_AS(run_suites(small_catalog(), opts), DomainError);
}

TEST_CASE("report structure and counts") {
  RunOptions opts;
  auto result = run_suites(small_catalog(), opts);
  CHECK(result.failed == 0);
  CHECK(result.passed > 0);
  CHECK(result.ok());

  const auto& r = result.report;
  CHECK(r.contains("tool_version"));
  CHECK(r.contains("caps"));
  CHECK(r.contains("timing"));
  REQUIRE(r.contains("groups"));
  CHECK(r["groups"].size() == 4);
  for (const auto& g : r["groups"]) {
    CHECK(g.contains("radicals"));
    CHECK(g["radicals"].contains("F"));
    CHECK(g["radicals"].contains("Fstar"));
    CHECK(g["radicals"].contains("Ftilde"));
    CHECK(g["radicals"].contains("h_star"));
    int fails = 0;
    for (const auto& c : g["checks"])
      if (c["status"] == "FAIL") ++fails;
    CHECK(fails == g["fail"].get<int>());
  }
  int sum = r["summary"]["pass"].get<int>();
  CHECK(sum == result.passed);
}

TEST_CASE("report is deterministic modulo the timing field") {
  RunOptions opts;
  auto a = run_suites(small_catalog(), opts);
  auto b = run_suites(small_catalog(), opts);
  a.report.erase("timing");
  b.report.erase("timing");
  CHECK(a.report.dump() == b.report.dump());

  // and byte-identical outright when timing is suppressed
  opts.with_timing = false;
  auto c = run_suites(small_catalog(), opts);
  auto d = run_suites(small_catalog(), opts);
  CHECK(c.report.dump() == d.report.dump());
  CHECK(!c.report.contains("timing"));
}

TEST_CASE("cap overruns surface as SKIPPED, not failures") {
  std::vector<CatalogEntry> cat;
  for (const auto& e : builtin_catalog())
    if (e.name == "S5") cat.push_back(e);  // order 120
  RunOptions opts;
  opts.caps.max_subgroup_order = 24;  // force Frattini-dependent skips
  auto result = run_suites(cat, opts);
  CHECK(result.failed == 0);
  CHECK(result.skipped > 0);
  bool found_reason = false;
  for (const auto& c : result.report["groups"][0]["checks"])
    if (c["status"] == "SKIPPED" && c.contains("detail")) found_reason = true;
  CHECK(found_reason);
}

TEST_CASE("suite selection restricts the run") {
  RunOptions opts;
  opts.suites = {"theorem4"};
  auto result = run_suites(small_catalog(), opts);
  for (const auto& g : result.report["groups"])
    for (const auto& c : g["checks"]) CHECK(c["suite"] == "theorem4");
}
