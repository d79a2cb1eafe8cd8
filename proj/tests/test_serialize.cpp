#include <gmpxx.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "qbeta/serialize.hpp"

using namespace qbeta;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qbeta_serialize_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("rational strings") {
  CHECK(rational_str(mpq_class(-22, 7)) == "-22/7");
  CHECK(rational_str(mpq_class(5)) == "5");
  CHECK(rational_parse("-22/7") == mpq_class(-22, 7));
  CHECK(rational_parse("5") == mpq_class(5));
  mpq_class unreduced = rational_parse("4/6");
  CHECK(unreduced == mpq_class(2, 3));
  CHECK_THROWS_AS(rational_parse("seven"), std::invalid_argument);
  CHECK_THROWS_AS(rational_parse("3/0"), std::invalid_argument);
}

TEST_CASE("laurent polynomials round-trip") {
  LaurentPoly p = LaurentPoly::monomial(mpq_class(3, 7), -4);
  p += LaurentPoly::monomial(mpq_class(-2), 0);
  p += LaurentPoly::monomial(mpq_class(1), 9);
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(laurent_from_json(laurent_to_json(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("rational functions round-trip") {
  PfcTable t = partial_fractions(FormParams{1, 3, 1});
  for (long s = 1; s <= 3; ++s)
    for (long j = 0; j <= 1; ++j)
      CHECK(ratfunc_from_json(ratfunc_to_json(t.c[s][j])) == t.c[s][j]);
}

TEST_CASE("bundles round-trip with their tables") {
  LinearFormBundle b = build_bundle(FormParams{1, 3, 1});
  LinearFormBundle rt = bundle_from_json(bundle_to_json(b));
  CHECK(rt.p == b.p);
  CHECK(rt.phat0 == b.phat0);
  CHECK(rt.phat == b.phat);
  CHECK(rt.table.c == b.table.c);
  CHECK(rt.table.d == b.table.d);
  IdentityReport rep = verify_identity(rt, mpq_class(1, 2), 128);
  CHECK(rep.pass);

  Json stale = bundle_to_json(b);
  stale["format_version"] = kBundleFormatVersion + 1;
  CHECK_THROWS_AS(bundle_from_json(stale), std::runtime_error);
}

TEST_CASE("disk cache") {
  TempDir tmp;
  FormParams p{1, 3, 1};
  CHECK(!load_bundle(tmp.path.string(), p).has_value());
  LinearFormBundle b = build_bundle(p);
  store_bundle(tmp.path.string(), b);
  auto loaded = load_bundle(tmp.path.string(), p);
  REQUIRE(loaded.has_value());
  CHECK(loaded->phat0 == b.phat0);
  CHECK(loaded->phat == b.phat);

  /* corrupt payloads and mismatched filenames read as absent */
  std::ofstream(bundle_cache_path(tmp.path.string(), p)) << "{ not json";
  CHECK(!load_bundle(tmp.path.string(), p).has_value());
  store_bundle(tmp.path.string(), b);
  FormParams other{3, 3, 1};
  fs::copy_file(bundle_cache_path(tmp.path.string(), p),
                bundle_cache_path(tmp.path.string(), other));
  CHECK(!load_bundle(tmp.path.string(), other).has_value());
}

TEST_CASE("run reports") {
  RunReport rep;
  rep.command = "demo";
  rep.params["n"] = 1;
  rep.prec = 128;
  rep.add("first", true, Json{{"detail", 7}});
  rep.record("evidence", Json{{"rows", 2}});
  CHECK(rep.all_passed());
  rep.add("second", false);
  CHECK(!rep.all_passed());
  Json j = rep.to_json();
  CHECK(j["schema"] == "report_v1");
  CHECK(j["artifact_version"] == kArtifactVersion);
  CHECK(j["command"] == "demo");
  CHECK(j["precision"] == 128);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["data"]["detail"] == 7);
  CHECK(j["checks"][1]["status"] == "recorded");
  CHECK(j["checks"][2]["status"] == "fail");
  CHECK(j["all_passed"] == false);
  CHECK(j.contains("wall_ms"));
}

TEST_CASE("rate series exports") {
  RateSeries s;
  s.which = "demo";
  s.limit = Real::of(mpq_class(1, 4), 64);
  RatePoint pt;
  pt.n = 5;
  pt.value = Real::of(mpq_class(1, 2), 64);
  pt.deviation = Real::of(mpq_class(1, 4), 64);
  s.points.push_back(pt);
  std::string csv = rate_series_csv(s);
  CHECK(csv.substr(0, 26) == "n,value,limit,deviation\n5,");
  Json j = rate_series_json(s);
  CHECK(j["which"] == "demo");
  CHECK(j["points"].size() == 1);
  CHECK(j["points"][0]["n"] == 5);
}

TEST_CASE("structured check payloads") {
  LinearFormBundle b = build_bundle(FormParams{1, 3, 1});
  DenomSpec spec = DenomSpec::defaults(3, 1);
  IntegralityResult res = check_integrality(b, build_Dn(spec, 1));
  Json ij = integrality_to_json(b.p, "Dn", res);
  CHECK(ij["denominator"] == "Dn");
  CHECK(ij["per_j"].size() == 2);
  CHECK(ij["per_j"]["0"]["member"] == true);
  ConjectureCell cell = conjecture_cell(b);
  Json cj = conjecture_cell_to_json(cell);
  CHECK(cj["denominator"] == "Dn_tilde");
  CHECK(cj["per_j"]["0"]["minimal_shift"] == 0);
  Json rj = real_json(Real::of(mpq_class(1, 3), 128));
  CHECK(rj.contains("value"));
  CHECK(rj["prec"] == 128);
}

}  // TEST_SUITE
