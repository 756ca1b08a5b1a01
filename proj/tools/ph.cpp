// ph: command-line front end over the padic-hyper C API.
//
//   ph verify --id thm-1.1 --p-min 5 --p-max 47 --precision 3 --out r.json
//   ph gfun --p 7 --top 1/4,3/4 --bot 0,1/2 --t 3
//   ph count --family dik --p 5 --lambda 2
//   ph gauss --p 13

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "padic_hyper/padic_hyper.h"

namespace {

enum Exit { kOk = 0, kFailures = 1, kUsage = 2, kIo = 3, kDomain = 4 };

int exit_for(ph_status s) {
  switch (s) {
    case PH_OK: return kOk;
    case PH_ERR_INVALID:
    case PH_ERR_BUDGET: return kUsage;
    case PH_ERR_IO: return kIo;
    case PH_ERR_DOMAIN:
    case PH_ERR_PRECISION: return kDomain;
    case PH_ERR_INTERNAL: return kFailures;
  }
  return kFailures;
}

int report_error(ph_status s) {
  std::fprintf(stderr, "ph: %s\n", ph_last_error());
  return exit_for(s);
}

struct CacheOptions {
  std::string dir;
  bool disabled = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cache-dir", dir, "Gamma-table cache directory (default $PADIC_HYPER_CACHE or ./.pgam-cache)");
    cmd->add_flag("--no-cache", disabled, "Recompute gamma tables instead of using the cache");
  }

  // Empty string means no cache.
  std::string resolve() const {
    if (disabled) return {};
    if (!dir.empty()) return dir;
    if (const char* env = std::getenv("PADIC_HYPER_CACHE"); env && *env) return env;
    return "./.pgam-cache";
  }
};

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string id = "all";
  uint32_t p_min = 5;
  uint32_t p_max = 47;
  int precision = 3;
  std::string out;
  std::string format;
  std::vector<int64_t> params;
  std::optional<int> infinity;
  bool calibrate = false;
  unsigned jobs = 0;
  bool quiet = false;
  CacheOptions cache;
};

std::string format_for(const VerifyArgs& a) {
  if (!a.format.empty()) return a.format;
  if (a.out.size() > 4 && a.out.compare(a.out.size() - 4, 4, ".csv") == 0) return "csv";
  return "json";
}

void print_row(const char* id, const ph_summary& s) {
  std::string primes = s.p_lo == 0 ? "-" : std::to_string(s.p_lo) + "-" + std::to_string(s.p_hi);
  std::printf("%-28s %-9s %8lld %8lld %8lld %8lld\n", id, primes.c_str(), static_cast<long long>(s.checked),
              static_cast<long long>(s.passed), static_cast<long long>(s.failed), static_cast<long long>(s.skipped));
}

bool covers_jacobi(const std::string& id) { return id == "all" || id == "thm-1.5"; }

int cmd_verify(const VerifyArgs& a) {
  std::string cache = a.cache.resolve();
  ph_sweep_config cfg;
  ph_sweep_config_init(&cfg);
  cfg.identity = a.id.c_str();
  cfg.p_min = a.p_min;
  cfg.p_max = a.p_max;
  cfg.precision = a.precision;
  cfg.params = a.params.empty() ? nullptr : a.params.data();
  cfg.nparams = a.params.size();
  cfg.infinity = a.infinity ? *a.infinity : -1;
  cfg.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  cfg.cache_dir = or_null(cache);

  ph_report* rep = nullptr;
  if (ph_status s = ph_sweep(&cfg, &rep); s != PH_OK) return report_error(s);

  int code = kOk;
  if (!a.out.empty()) {
    if (ph_status s = ph_report_write(rep, a.out.c_str(), format_for(a).c_str()); s != PH_OK) {
      code = report_error(s);
      ph_report_destroy(rep);
      return code;
    }
  }

  ph_summary total{};
  int infinity = 0;
  ph_report_summary(rep, &total, &infinity);
  if (!a.quiet) {
    std::printf("%-28s %-9s %8s %8s %8s %8s\n", "identity", "primes", "checked", "passed", "failed", "skipped");
    for (size_t i = 0; i < ph_report_group_count(rep); ++i) {
      const char* id = nullptr;
      ph_summary s{};
      ph_report_group(rep, i, &id, &s);
      print_row(id, s);
    }
    print_row("total", total);
    if (covers_jacobi(a.id))
      std::printf("jacobi infinity convention: I = %d (%s)\n", infinity, a.infinity ? "fixed" : "calibrated");
  }

  if (total.failed > 0) {
    std::printf("FAILURES: %lld\n", static_cast<long long>(total.failed));
    size_t shown = 0;
    for (size_t i = 0; i < ph_report_size(rep) && shown < 10; ++i) {
      ph_verdict v{};
      ph_report_verdict(rep, i, &v);
      if (v.skip || v.equal) continue;
      std::printf("  %s p=%u %s\n", v.identity, v.p, v.params_json);
      ++shown;
    }
    if (static_cast<int64_t>(shown) < total.failed) std::printf("  ...\n");
    code = kFailures;
  }
  if (!a.out.empty() && !a.quiet) std::printf("report written to %s\n", a.out.c_str());
  ph_report_destroy(rep);
  return code;
}

// ---- gfun -----------------------------------------------------------------

struct GfunArgs {
  uint32_t p = 0;
  int precision = 3;
  std::string top;
  std::string bot;
  int64_t t = 0;
  CacheOptions cache;
};

int cmd_gfun(const GfunArgs& a) {
  std::string cache = a.cache.resolve();
  ph_context* ctx = nullptr;
  if (ph_status s = ph_context_create(a.p, a.precision, or_null(cache), &ctx); s != PH_OK) return report_error(s);
  size_t len = 0;
  int used = 0;
  std::string buf(256, '\0');
  ph_status s = ph_gfun(ctx, a.top.c_str(), a.bot.c_str(), a.t, buf.data(), buf.size(), &len, &used);
  if (s == PH_ERR_INVALID && len + 1 > buf.size()) {
    buf.assign(len + 1, '\0');
    s = ph_gfun(ctx, a.top.c_str(), a.bot.c_str(), a.t, buf.data(), buf.size(), &len, &used);
  }
  ph_context_destroy(ctx);
  if (s != PH_OK) return report_error(s);
  buf.resize(len);
  std::printf("%s\n", buf.c_str());
  return kOk;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::string family;
  uint32_t p = 0;
  std::optional<int64_t> lambda, d;
  int64_t a2 = 0, a4 = 0, a6 = 0;
  int infinity = 1;
};

int cmd_count(const CountArgs& a) {
  std::vector<int64_t> params;
  if (a.family == "dik" || a.family == "jacobi") {
    if (!a.lambda) {
      std::fprintf(stderr, "ph: --lambda is required for family %s\n", a.family.c_str());
      return kUsage;
    }
    params = {*a.lambda};
  } else if (a.family == "hessian") {
    if (!a.d) {
      std::fprintf(stderr, "ph: --d is required for family hessian\n");
      return kUsage;
    }
    params = {*a.d};
  } else {
    params = {a.a2, a.a4, a.a6};
  }
  ph_count_result r{};
  if (ph_status s = ph_count(a.p, a.family.c_str(), params.data(), params.size(), a.infinity, &r); s != PH_OK)
    return report_error(s);
  std::printf("family:          %s\n", a.family.c_str());
  std::printf("p:               %u\n", a.p);
  std::printf("total:           %lld\n", static_cast<long long>(r.total));
  std::printf("infinity points: %lld\n", static_cast<long long>(r.infinity_points));
  std::printf("affine points:   %lld\n", static_cast<long long>(r.affine));
  std::printf("trace:           %lld\n", static_cast<long long>(r.trace));
  std::printf("convention:      %s\n", r.convention);
  // Hasse: |a_p| <= 2 sqrt(p), i.e. a_p^2 <= 4p.
  bool hasse = r.trace * r.trace <= 4 * static_cast<int64_t>(a.p);
  std::printf("hasse bound:     %s\n", hasse ? "ok" : "VIOLATED");
  return hasse ? kOk : kFailures;
}

// ---- gauss ----------------------------------------------------------------

struct GaussArgs {
  uint32_t p = 0;
  int precision = 3;
  uint32_t cap = 50;
  CacheOptions cache;
};

int cmd_gauss(const GaussArgs& a) {
  if (a.p > a.cap) {
    std::fprintf(stderr, "ph: refusing p = %u: above the Eisenstein cap %u (raise --cap to override)\n", a.p, a.cap);
    return kUsage;
  }
  std::string cache = a.cache.resolve();
  ph_report* rep = nullptr;
  if (ph_status s = ph_gauss(a.p, a.precision, a.cap, or_null(cache), &rep); s != PH_OK) return report_error(s);

  std::string gk;
  // chi exponent -> (psi -> pass)
  std::map<int, std::map<int, bool>> hd;
  std::map<int, int> order;
  for (size_t i = 0; i < ph_report_size(rep); ++i) {
    ph_verdict v{};
    ph_report_verdict(rep, i, &v);
    auto params = nlohmann::json::parse(v.params_json);
    bool ok = v.equal && !v.skip;
    if (std::string(v.identity) == "thm-2.7-gross-koblitz") {
      gk += ok ? '.' : 'X';
    } else {
      int chi = std::stoi(params.at("chi").get<std::string>());
      hd[chi][std::stoi(params.at("psi").get<std::string>())] = ok;
      order[chi] = std::stoi(params.at("m").get<std::string>());
    }
  }

  std::printf("p = %u, N = %d, pi-adic precision %u  ('.' pass, 'X' fail)\n\n", a.p, a.precision,
              (a.p - 1) * a.precision);
  std::printf("Gross-Koblitz  j = 0..%u\n  %s\n\n", a.p - 2, gk.c_str());
  std::printf("Hasse-Davenport  rows: chi = omega^e (order m), columns: psi = omega^0..omega^%u\n", a.p - 2);
  for (const auto& [chi, row] : hd) {
    std::string cells;
    for (const auto& [psi, ok] : row) cells += ok ? '.' : 'X';
    std::printf("  e=%-3d m=%-3d %s\n", chi, order[chi], cells.c_str());
  }

  ph_summary total{};
  ph_report_summary(rep, &total, nullptr);
  std::printf("\nchecked %lld, passed %lld, failed %lld\n", static_cast<long long>(total.checked),
              static_cast<long long>(total.passed), static_cast<long long>(total.failed));
  ph_report_destroy(rep);
  return total.failed == 0 ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic hypergeometric functions, Gauss sums and point counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ph_version());

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Sweep identities over a prime range and report");
  verify->add_option("--id", va.id, "Identity id, 'lemmas' or 'all'");
  verify->add_option("--p-min", va.p_min, "Smallest prime (>= 5)");
  verify->add_option("--p-max", va.p_max, "Largest prime");
  verify->add_option("--precision,-N", va.precision, "p-adic precision N (>= 2)");
  verify->add_option("--out,-o", va.out, "Report file");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--params", va.params, "Explicit lambda or d values")->delimiter(',');
  auto* inf = verify->add_option("--infinity", va.infinity, "Jacobi points at infinity")->check(CLI::Range(0, 2));
  verify->add_flag("--calibrate-infinity", va.calibrate, "Calibrate the Jacobi convention (default)")->excludes(inf);
  verify->add_option("--jobs,-j", va.jobs, "Worker threads (0: all cores)");
  verify->add_flag("--quiet,-q", va.quiet, "Suppress the summary table");
  va.cache.attach(verify);

  GfunArgs ga;
  auto* gfun = app.add_subcommand("gfun", "Evaluate nGn[top; bot | t]");
  gfun->add_option("--p", ga.p, "Prime")->required();
  gfun->add_option("--precision,-N", ga.precision, "p-adic precision N");
  gfun->add_option("--top", ga.top, "Comma-separated rationals a_1..a_n")->required();
  gfun->add_option("--bot", ga.bot, "Comma-separated rationals b_1..b_n")->required();
  gfun->add_option("--t", ga.t, "Argument t in F_p")->required();
  ga.cache.attach(gfun);

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "Count points on a curve over F_p");
  cnt->add_option("--family", ca.family, "Curve family")
      ->required()
      ->check(CLI::IsMember({"dik", "jacobi", "hessian", "weierstrass"}));
  cnt->add_option("--p", ca.p, "Prime")->required();
  cnt->add_option("--lambda", ca.lambda, "lambda (dik, jacobi)");
  cnt->add_option("--d", ca.d, "d (hessian)");
  cnt->add_option("--a2", ca.a2, "y^2 = x^3 + a2 x^2 + a4 x + a6");
  cnt->add_option("--a4", ca.a4);
  cnt->add_option("--a6", ca.a6);
  cnt->add_option("--infinity", ca.infinity, "Jacobi points at infinity")->check(CLI::Range(0, 2));

  GaussArgs gs;
  auto* gauss = app.add_subcommand("gauss", "Gross-Koblitz and Hasse-Davenport checks at one prime");
  gauss->add_option("--p", gs.p, "Prime")->required();
  gauss->add_option("--precision,-N", gs.precision, "p-adic precision N");
  gauss->add_option("--cap", gs.cap, "Eisenstein cap");
  gs.cache.attach(gauss);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*verify) {
    std::set<std::string> known;
    for (size_t i = 0; i < ph_identity_count(); ++i) known.insert(ph_identity_name(i));
    if (va.id != "all" && va.id != "lemmas" && !known.count(va.id)) {
      std::fprintf(stderr, "ph: unknown identity '%s'; valid: all, lemmas", va.id.c_str());
      for (size_t i = 0; i < ph_identity_count(); ++i) std::fprintf(stderr, ", %s", ph_identity_name(i));
      std::fprintf(stderr, "\n");
      return kUsage;
    }
    if (va.p_min < 5 || va.p_max < va.p_min || va.precision < 2) {
      std::fprintf(stderr, "ph: need p-min >= 5, p-max >= p-min and precision >= 2\n");
      return kUsage;
    }
    return cmd_verify(va);
  }
  if (*gfun) return cmd_gfun(ga);
  if (*cnt) return cmd_count(ca);
  return cmd_gauss(gs);
}
