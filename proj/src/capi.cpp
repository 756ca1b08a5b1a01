#include "padic_hyper/padic_hyper.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "padic_hyper/curves.hpp"
#include "padic_hyper/eisenstein.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/hyperg.hpp"
#include "padic_hyper/report.hpp"
#include "padic_hyper/verify.hpp"
#include "padic_hyper/version.hpp"

using namespace phyper;

struct ph_context {
  std::shared_ptr<const Context> ctx;
};

struct ph_report {
  SweepReport report;
  std::vector<std::string> params;  // params_json per verdict
  std::vector<std::string> groups;  // identity ids in report order
};

namespace {

thread_local std::string g_error;

ph_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument: return PH_ERR_INVALID;
    case ErrorCode::kDomain: return PH_ERR_DOMAIN;
    case ErrorCode::kPrecision: return PH_ERR_PRECISION;
    case ErrorCode::kBudget: return PH_ERR_BUDGET;
    case ErrorCode::kIo: return PH_ERR_IO;
    case ErrorCode::kInternal: return PH_ERR_INTERNAL;
  }
  return PH_ERR_INTERNAL;
}

template <class Fn>
ph_status guarded(Fn&& fn) {
  try {
    g_error.clear();
    fn();
    return PH_OK;
  } catch (const Error& e) {
    g_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return PH_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_error = e.what();
    return PH_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::kInvalidArgument, what);
}

void copy_out(const std::string& s, char* buf, size_t cap, size_t* len) {
  if (len) *len = s.size();
  if (!buf || cap < s.size() + 1)
    fail(ErrorCode::kInvalidArgument, "output buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

std::vector<FpRational> parse_list(const char* text) {
  std::vector<FpRational> out;
  std::string s = text ? text : "";
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ContextOptions options_for(const char* cache_dir) {
  ContextOptions o;
  if (cache_dir && *cache_dir) o.cache_dir = std::filesystem::path(cache_dir);
  return o;
}

ph_report* wrap(SweepReport r) {
  auto out = std::make_unique<ph_report>();
  out->report = std::move(r);
  for (const auto& v : out->report.results) out->params.push_back(params_json(v));
  for (const auto& [id, t] : out->report.by_identity) out->groups.push_back(id);
  // Report order: identity_ids() order first, anything else after.
  std::vector<std::string> ordered;
  for (const auto& id : identity_ids())
    if (out->report.by_identity.count(id)) ordered.push_back(id);
  for (const auto& id : out->groups)
    if (std::find(ordered.begin(), ordered.end(), id) == ordered.end()) ordered.push_back(id);
  out->groups = std::move(ordered);
  return out.release();
}

void fill(const Tally& t, ph_summary* out) {
  out->checked = t.checked;
  out->passed = t.passed;
  out->failed = t.failed;
  out->skipped = t.skipped;
  out->p_lo = t.p_lo;
  out->p_hi = t.p_hi;
}

}  // namespace

extern "C" {

const char* ph_version(void) { return kVersion; }

const char* ph_last_error(void) { return g_error.c_str(); }

ph_status ph_context_create(uint32_t p, int precision, const char* cache_dir, ph_context** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = nullptr;
    auto c = std::make_unique<ph_context>();
    c->ctx = Context::create(p, precision, options_for(cache_dir));
    *out = c.release();
  });
}

void ph_context_destroy(ph_context* ctx) { delete ctx; }

ph_status ph_gfun(const ph_context* ctx, const char* top, const char* bot, int64_t t, char* buf, size_t cap,
                  size_t* len, int* precision_used) {
  return guarded([&] {
    require(ctx != nullptr, "context is NULL");
    HyperParams hp{parse_list(top), parse_list(bot), t};
    GValue g = nGn(hp, *ctx->ctx);
    if (precision_used) *precision_used = g.precision_used;
    copy_out(g.value.str(), buf, cap, len);
  });
}

ph_status ph_count(uint32_t p, const char* family, const int64_t* params, size_t nparams, int infinity,
                   ph_count_result* out) {
  return guarded([&] {
    require(out != nullptr && family != nullptr, "NULL argument");
    require(nparams == 0 || params != nullptr, "params is NULL");
    CurveSpec spec;
    spec.p = p;
    spec.params.assign(params, params + nparams);
    std::string f = family;
    if (f == "dik")
      spec.family = Family::kDIK;
    else if (f == "jacobi")
      spec.family = Family::kJacobiQuartic;
    else if (f == "hessian")
      spec.family = Family::kHessian;
    else if (f == "weierstrass")
      spec.family = nparams == 2 ? Family::kShortWeierstrass : Family::kWeierstrassA2;
    else
      fail(ErrorCode::kInvalidArgument, "unknown family '" + f + "'");
    CountResult r = count(spec, infinity);
    out->total = r.total;
    out->trace = r.trace;
    out->infinity_points = r.infinity_points;
    out->affine = r.affine();
    std::snprintf(out->convention, sizeof out->convention, "%s", r.convention.c_str());
  });
}

void ph_sweep_config_init(ph_sweep_config* cfg) {
  if (!cfg) return;
  *cfg = ph_sweep_config{};
  cfg->identity = "all";
  cfg->p_min = 5;
  cfg->p_max = 47;
  cfg->precision = 3;
  cfg->infinity = -1;
  cfg->jobs = 1;
  cfg->eisenstein_cap = kDefaultEisensteinCap;
}

ph_status ph_sweep(const ph_sweep_config* cfg, ph_report** out) {
  return guarded([&] {
    require(cfg != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    SweepConfig c;
    c.identity = cfg->identity ? cfg->identity : "all";
    c.p_min = cfg->p_min;
    c.p_max = cfg->p_max;
    c.precision = cfg->precision;
    if (cfg->nparams > 0) {
      require(cfg->params != nullptr, "params is NULL");
      c.params.assign(cfg->params, cfg->params + cfg->nparams);
    }
    if (cfg->infinity >= 0) c.infinity = cfg->infinity;
    c.jobs = cfg->jobs;
    c.context = options_for(cfg->cache_dir);
    c.eisenstein_cap = cfg->eisenstein_cap;
    *out = wrap(sweep(c));
  });
}

ph_status ph_gauss(uint32_t p, int precision, uint32_t cap, const char* cache_dir, ph_report** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = nullptr;
    auto ctx = Context::create(p, precision, options_for(cache_dir));
    EisensteinField field(ctx, cap);
    SweepReport r;
    r.config.identity = "gauss";
    r.config.p_min = r.config.p_max = p;
    r.config.precision = precision;
    r.config.eisenstein_cap = cap;
    for (int64_t j = 0; j + 1 < static_cast<int64_t>(p); ++j) r.results.push_back(gross_koblitz_check(field, j));
    const CharacterTable& chars = ctx->chars();
    const uint32_t q = p - 1;
    for (uint32_t m = 1; m <= q; ++m) {
      if (q % m != 0) continue;
      for (uint32_t e = 0; e < q; ++e) {
        if (chars.order(CharExp{e}) != m) continue;
        for (uint32_t psi = 0; psi < q; ++psi)
          r.results.push_back(hasse_davenport_check(field, CharExp{e}, m, CharExp{psi}));
      }
    }
    for (const auto& v : r.results) {
      r.by_identity[v.identity].add(v);
      r.totals.add(v);
    }
    *out = wrap(std::move(r));
  });
}

ph_status ph_report_summary(const ph_report* rep, ph_summary* out, int* infinity_convention) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "NULL argument");
    fill(rep->report.totals, out);
    if (infinity_convention) *infinity_convention = rep->report.infinity_convention;
  });
}

size_t ph_report_group_count(const ph_report* rep) { return rep ? rep->groups.size() : 0; }

ph_status ph_report_group(const ph_report* rep, size_t index, const char** identity, ph_summary* out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "NULL argument");
    require(index < rep->groups.size(), "group index out of range");
    const std::string& id = rep->groups[index];
    if (identity) *identity = id.c_str();
    fill(rep->report.by_identity.at(id), out);
  });
}

size_t ph_report_size(const ph_report* rep) { return rep ? rep->report.results.size() : 0; }

ph_status ph_report_verdict(const ph_report* rep, size_t index, ph_verdict* out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "NULL argument");
    require(index < rep->report.results.size(), "verdict index out of range");
    const Verdict& v = rep->report.results[index];
    out->identity = v.identity.c_str();
    out->p = v.p;
    out->params_json = rep->params[index].c_str();
    out->lhs = v.lhs.c_str();
    out->rhs = v.rhs.c_str();
    out->equal = v.equal ? 1 : 0;
    out->precision = v.precision;
    out->skip = v.skip ? v.skip->c_str() : nullptr;
  });
}

ph_status ph_report_write(const ph_report* rep, const char* path, const char* format) {
  return guarded([&] {
    require(rep != nullptr && path != nullptr, "NULL argument");
    write_report(rep->report, path, parse_format(format ? format : "json"));
  });
}

ph_status ph_report_render(const ph_report* rep, const char* format, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    require(rep != nullptr, "report is NULL");
    copy_out(render_report(rep->report, parse_format(format ? format : "json")), buf, cap, len);
  });
}

void ph_report_destroy(ph_report* rep) { delete rep; }

size_t ph_identity_count(void) { return identity_ids().size(); }

const char* ph_identity_name(size_t index) {
  const auto& ids = identity_ids();
  return index < ids.size() ? ids[index].c_str() : nullptr;
}

}  // extern "C"
