// End-to-end sweeps through the core library.

#include <filesystem>

#include "doctest.h"
#include "padic_hyper/report.hpp"
#include "padic_hyper/verify.hpp"

using namespace phyper;
namespace fs = std::filesystem;

TEST_CASE("theorem 1.1 sweep over small primes has no failures") {
  SweepConfig c;
  c.identity = "thm-1.1";
  c.p_max = 23;
  auto rep = sweep(c);
  const auto& t = rep.by_identity.at("thm-1.1");
  CHECK(t.failed == 0);
  CHECK(t.passed > 0);
  CHECK(t.skipped == 2 * 7);  // lambda = 0 and 9/4 at each of 7 primes
  CHECK(t.p_lo == 5);
  CHECK(t.p_hi == 23);
}

TEST_CASE("empty prime range gives zero totals") {
  SweepConfig c;
  c.p_min = 24;
  c.p_max = 28;
  auto rep = sweep(c);
  CHECK(rep.results.empty());
  CHECK(rep.totals.checked == 0);
  CHECK(rep.totals.skipped == 0);
}

TEST_CASE("parallel sweeps are deterministic") {
  SweepConfig c;
  c.p_max = 19;
  c.jobs = 1;
  auto serial = render_report(sweep(c), ReportFormat::kJson);
  c.jobs = 4;
  auto parallel = render_report(sweep(c), ReportFormat::kJson);
  CHECK(serial == parallel);
}

TEST_CASE("explicit parameter lists are reduced and deduplicated") {
  SweepConfig c;
  c.identity = "thm-1.1";
  c.p_min = 7;
  c.p_max = 7;
  c.params = {3, 10, -4, 1};
  auto rep = sweep(c);
  REQUIRE(rep.results.size() == 2);
  CHECK(rep.results[0].params.at("lambda") == "1");
  CHECK(rep.results[1].params.at("lambda") == "3");
}

TEST_CASE("calibration is recorded once per report") {
  SweepConfig c;
  c.identity = "thm-1.5";
  c.p_max = 17;
  auto rep = sweep(c);
  CHECK(rep.infinity_calibrated);
  CHECK(rep.infinity_convention == 1);
  c.infinity = 0;
  auto fixed = sweep(c);
  CHECK_FALSE(fixed.infinity_calibrated);
  CHECK(fixed.by_identity.at("thm-1.5").failed > 0);
}

TEST_CASE("gamma cache is used and reproducible") {
  fs::path dir = fs::temp_directory_path() / "ph-sweep-cache-test";
  fs::remove_all(dir);
  SweepConfig c;
  c.identity = "thm-1.1";
  c.p_max = 13;
  auto plain = render_report(sweep(c), ReportFormat::kJson);
  c.context.cache_dir = dir;
  auto cold = sweep(c);
  CHECK(fs::exists(dir / "pgam-13-3.bin"));
  auto warm = sweep(c);
  CHECK(render_report(cold, ReportFormat::kJson) == render_report(warm, ReportFormat::kJson));
  CHECK(render_report(cold, ReportFormat::kJson).find("\"cache\": \"enabled\"") != std::string::npos);
  CHECK(plain.find("\"cache\": \"disabled\"") != std::string::npos);
  fs::remove_all(dir);
}
