#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "padic_hyper/curves.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/hyperg.hpp"
#include "padic_hyper/modarith.hpp"
#include "padic_hyper/verify.hpp"

namespace phyper {
namespace {

using ParamVerifier = Verdict (*)(const Context&, int64_t);

struct TheoremEntry {
  const char* id;
  ParamVerifier fn;  // nullptr for thm-1.5, which also takes the convention
};

const std::vector<TheoremEntry>& theorem_table() {
  static const std::vector<TheoremEntry> table = {
      {"thm-1.1", verify_thm_1_1},
      {"thm-1.2", verify_thm_1_2},
      {"thm-1.3", verify_thm_1_3},
      {"thm-1.4", verify_thm_1_4},
      {"xcheck-1.3-1.1", verify_xcheck_1_3_1_1},
      {"xcheck-1.4-1.2", verify_xcheck_1_4_1_2},
      {"thm-1.5", nullptr},
      {"thm-1.6", verify_thm_1_6},
      {"thm-1.7", verify_thm_1_7},
      {"thm-1.8", verify_thm_1_8},
  };
  return table;
}

bool is_theorem(const std::string& id) {
  for (const auto& e : theorem_table())
    if (id == e.id) return true;
  return false;
}

Verdict run_theorem(const std::string& id, const Context& ctx, int64_t param, int infinity) {
  if (id == "thm-1.5") return verify_thm_1_5(ctx, param, infinity);
  for (const auto& e : theorem_table())
    if (id == e.id) return e.fn(ctx, param);
  fail(ErrorCode::kInvalidArgument, "unknown theorem id '" + id + "'");
}

std::string param_key(const std::string& id) { return (id == "thm-1.7" || id == "thm-1.8") ? "d" : "lambda"; }

// Runs fn(i) for i in [0, n) on `jobs` threads. The first exception is
// rethrown after all workers stop.
template <class Fn>
void parallel_for(size_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<size_t>(n, 1))));
  if (jobs == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct Task {
  uint32_t p;
  std::string id;
  int64_t param;  // unused for lemmas
};

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : theorem_table()) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = theorem_ids();
    v.insert(v.end(), lemma_ids().begin(), lemma_ids().end());
    return v;
  }();
  return ids;
}

bool is_identity(const std::string& id) {
  const auto& ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::string> expand_identity(const std::string& id) {
  if (id == "all") return identity_ids();
  if (id == "lemmas") return lemma_ids();
  if (is_identity(id)) return {id};
  fail(ErrorCode::kInvalidArgument, "unknown identity '" + id + "'");
}

std::vector<uint32_t> primes_between(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  for (uint64_t n = std::max<uint32_t>(lo, 2); n <= hi; ++n)
    if (is_prime(n)) out.push_back(static_cast<uint32_t>(n));
  return out;
}

void SweepConfig::validate() const {
  if (p_min < 5) fail(ErrorCode::kInvalidArgument, "p_min must be >= 5");
  if (p_max < p_min) fail(ErrorCode::kInvalidArgument, "p_max must be >= p_min");
  if (precision < 2) fail(ErrorCode::kInvalidArgument, "precision N must be >= 2");
  if (infinity && (*infinity < 0 || *infinity > 2))
    fail(ErrorCode::kInvalidArgument, "infinity convention must be 0, 1 or 2");
  expand_identity(identity);
}

void Tally::add(const Verdict& v) {
  if (p_lo == 0 || v.p < p_lo) p_lo = v.p;
  p_hi = std::max(p_hi, v.p);
  if (v.skipped()) {
    ++skipped;
    return;
  }
  ++checked;
  if (v.equal)
    ++passed;
  else
    ++failed;
}

std::vector<const Verdict*> SweepReport::failures() const {
  std::vector<const Verdict*> out;
  for (const auto& v : results)
    if (v.failed()) out.push_back(&v);
  return out;
}

int calibrate_infinity(uint32_t p_min, uint32_t p_max, int precision, const ContextOptions& options) {
  int64_t failures[3] = {0, 0, 0};
  for (uint32_t p : primes_between(std::max<uint32_t>(p_min, 5), p_max)) {
    auto ctx = Context::create(p, precision, options);
    for (int64_t l = 0; l < p; ++l) {
      if (l == 0 || (l * l - 1) % p == 0) continue;
      Verdict base = verify_thm_1_5(*ctx, l, 0);
      if (base.skipped()) continue;
      // The trace shifts by -I with I points at infinity; the G-side does not.
      PadicNum e1 = *base.rhs_value;
      for (int I = 0; I < 3; ++I) {
        PadicNum trace = *base.lhs_value - ctx->integer(I);
        int A = std::min(trace.precision(), e1.precision());
        if (A < precision - 2 || !equals_at(trace, e1, A)) ++failures[I];
      }
    }
  }
  int best = 0;
  for (int I = 1; I < 3; ++I)
    if (failures[I] < failures[best]) best = I;
  return best;
}

SweepReport sweep(const SweepConfig& config) {
  config.validate();
  SweepReport report;
  report.config = config;
  const std::vector<std::string> ids = expand_identity(config.identity);
  const std::vector<uint32_t> primes = primes_between(config.p_min, config.p_max);
  const unsigned jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;

  bool needs_jacobi = std::find(ids.begin(), ids.end(), "thm-1.5") != ids.end();
  if (config.infinity) {
    report.infinity_convention = *config.infinity;
  } else if (needs_jacobi && !primes.empty()) {
    report.infinity_convention = calibrate_infinity(config.p_min, config.p_max, config.precision, config.context);
    report.infinity_calibrated = true;
  }

  bool needs_field = std::any_of(ids.begin(), ids.end(), [](const std::string& id) { return lemma_needs_field(id); });
  std::vector<std::shared_ptr<const Context>> contexts(primes.size());
  std::vector<std::unique_ptr<EisensteinField>> fields(primes.size());
  parallel_for(primes.size(), jobs, [&](size_t i) {
    contexts[i] = Context::create(primes[i], config.precision, config.context);
    if (needs_field && primes[i] <= config.eisenstein_cap)
      fields[i] = std::make_unique<EisensteinField>(contexts[i], config.eisenstein_cap);
  });

  std::vector<Task> tasks;
  std::vector<size_t> prime_index;
  for (size_t pi = 0; pi < primes.size(); ++pi) {
    const uint32_t p = primes[pi];
    std::vector<int64_t> values;
    if (config.params.empty()) {
      for (int64_t v = 0; v < p; ++v) values.push_back(v);
    } else {
      for (int64_t v : config.params) values.push_back(fp(v, p));
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    for (const auto& id : ids) {
      if (is_theorem(id)) {
        for (int64_t v : values) {
          tasks.push_back({p, id, v});
          prime_index.push_back(pi);
        }
      } else {
        tasks.push_back({p, id, 0});
        prime_index.push_back(pi);
      }
    }
  }

  report.results.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](size_t i) {
    const Task& t = tasks[i];
    const Context& ctx = *contexts[prime_index[i]];
    Verdict v;
    try {
      if (is_theorem(t.id))
        v = run_theorem(t.id, ctx, t.param, report.infinity_convention);
      else
        v = verify_lemma(t.id, ctx, fields[prime_index[i]].get());
    } catch (const Error& e) {
      std::map<std::string, std::string> params{{"N", std::to_string(ctx.precision())}};
      if (is_theorem(t.id)) params[param_key(t.id)] = std::to_string(t.param);
      if (e.code() == ErrorCode::kDomain) {
        v = make_skip(t.id, t.p, params, "domain-error");
      } else {
        v.identity = t.id;
        v.p = t.p;
        v.params = params;
        v.equal = false;
      }
      v.params["error"] = e.what();
    }
    report.results[i] = std::move(v);
  });

  for (const auto& id : ids) report.by_identity[id];
  for (const auto& v : report.results) {
    report.by_identity[v.identity].add(v);
    report.totals.add(v);
  }
  return report;
}

}  // namespace phyper
