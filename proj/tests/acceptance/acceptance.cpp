// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all ten
//   acceptance --criterion 3   run one (exit status 0 iff it passes)

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "padic_hyper/curves.hpp"
#include "padic_hyper/eisenstein.hpp"
#include "padic_hyper/error.hpp"
#include "padic_hyper/verify.hpp"

using namespace phyper;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

SweepReport run(const std::string& id, uint32_t p_min, uint32_t p_max, int N = 3) {
  SweepConfig c;
  c.identity = id;
  c.p_min = p_min;
  c.p_max = p_max;
  c.precision = N;
  c.jobs = jobs();
  return sweep(c);
}

std::string tally(const std::string& id, const Tally& t) {
  std::ostringstream s;
  s << id << " " << t.checked << " checked/" << t.failed << " failed/" << t.skipped << " skipped";
  return s.str();
}

// Primes where an identity failed, for the detail line.
std::string failing_primes(const SweepReport& r, const std::string& id) {
  std::vector<uint32_t> ps;
  for (const auto& v : r.results)
    if (v.identity == id && v.failed() && (ps.empty() || ps.back() != v.p)) ps.push_back(v.p);
  if (ps.empty()) return "";
  std::string s = " (fails at p =";
  for (uint32_t p : ps) s += " " + std::to_string(p);
  return s + ")";
}

Outcome sweep_all_pass(const std::vector<std::string>& ids, uint32_t p_max) {
  Outcome o{true, ""};
  for (const auto& id : ids) {
    auto r = run(id, 5, p_max);
    const Tally& t = r.by_identity.at(id);
    if (t.failed != 0 || t.checked == 0) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += tally(id, t) + failing_primes(r, id);
  }
  return o;
}

Outcome c1() { return sweep_all_pass({"thm-1.1"}, 47); }

Outcome c2() { return sweep_all_pass({"thm-1.2", "thm-1.3", "thm-1.4", "xcheck-1.3-1.1", "xcheck-1.4-1.2"}, 47); }

Outcome c3() {
  auto r = run("thm-1.5", 5, 47);
  const Tally& t = r.by_identity.at("thm-1.5");
  int64_t euler_bad = 0;
  for (const auto& v : r.results)
    if (!v.skipped() && v.params.at("euler_equal") != "true") ++euler_bad;
  // The calibrated convention must be the only one that works.
  int others_clean = 0;
  for (int I = 0; I < 3; ++I) {
    if (I == r.infinity_convention) continue;
    SweepConfig c;
    c.identity = "thm-1.5";
    c.p_max = 47;
    c.infinity = I;
    c.jobs = jobs();
    if (sweep(c).totals.failed == 0) ++others_clean;
  }
  Outcome o;
  o.pass = t.failed == 0 && t.checked > 0 && euler_bad == 0 && others_clean == 0;
  o.detail = tally("thm-1.5", t) + ", I = " + std::to_string(r.infinity_convention) +
             ", euler mismatches " + std::to_string(euler_bad) + ", other conventions passing " +
             std::to_string(others_clean);
  return o;
}

Outcome c4() { return sweep_all_pass({"thm-1.6"}, 47); }

Outcome c5() { return sweep_all_pass({"thm-1.7", "thm-1.8"}, 31); }

Outcome c6() {
  Outcome o{true, ""};
  int64_t cases = 0;
  for (uint32_t p : {5u, 7u, 11u, 13u}) {
    auto ctx = Context::create(p, 3);
    EisensteinField field(ctx);
    for (int64_t j = 0; j + 1 < p; ++j) {
      auto v = gross_koblitz_check(field, j);
      ++cases;
      if (!v.equal || v.precision < static_cast<int>(p - 1) * 2) {
        o.pass = false;
        o.detail += " p=" + std::to_string(p) + ",j=" + std::to_string(j);
      }
    }
  }
  o.detail = "gross-koblitz " + std::to_string(cases) + " cases" + (o.pass ? "" : ", failing:" + o.detail);
  return o;
}

Outcome lemma_group(const std::vector<std::string>& ids, const std::vector<uint32_t>& primes) {
  Outcome o{true, ""};
  for (const auto& id : ids) {
    int64_t cases = 0, failed = 0;
    std::string where;
    for (uint32_t p : primes) {
      auto ctx = Context::create(p, 3);
      std::unique_ptr<EisensteinField> field;
      if (lemma_needs_field(id)) field = std::make_unique<EisensteinField>(ctx);
      auto v = verify_lemma(id, *ctx, field.get());
      if (v.skipped()) {
        ++failed;
        where += " p=" + std::to_string(p) + "(skipped)";
        continue;
      }
      cases += std::stoll(v.params.at("cases"));
      int64_t f = std::stoll(v.params.at("failed_cases"));
      if (!v.equal || f != 0) {
        failed += std::max<int64_t>(f, 1);
        where += " p=" + std::to_string(p);
      }
    }
    if (failed) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += id + " " + std::to_string(cases) + " cases/" + std::to_string(failed) + " failed" + where;
  }
  return o;
}

Outcome c7() {
  return lemma_group({"thm-2.4-hasse-davenport", "eq-2.3-gauss-inverse", "lemma-2.2-fuselier", "lemma-2.5-gauss-jacobi"},
                     {5, 7, 11, 13});
}

Outcome c8() {
  Outcome floors = lemma_group({"lemma-2.6-floor", "lemma-2.7-floor", "lemma-2.8-floor"}, primes_between(5, 100));
  Outcome gammas =
      lemma_group({"lemma-2.9-squared", "lemma-2.9-ring", "lemma-2.10", "lemma-2.11"}, primes_between(5, 31));
  return {floors.pass && gammas.pass, floors.detail + "; " + gammas.detail};
}

Outcome c9() {
  int64_t dik = count_dik(2, 5).trace;
  int64_t w = count_weierstrass(2, 2, 0, 5).trace;
  int64_t jac = jacobi_affine_count(2, 5);
  Outcome o;
  o.pass = dik == 0 && w == -2 && jac == 6;
  o.detail = "dik(5,2).trace=" + std::to_string(dik) + " weierstrass(5;2,2,0).trace=" + std::to_string(w) +
             " jacobi_affine(5,2)=" + std::to_string(jac);
  return o;
}

Outcome c10() {
  std::mt19937_64 rng(0x5eed2024);
  const auto& ids = theorem_ids();
  const auto primes = primes_between(5, 47);
  int mismatched = 0, truncation_bad = 0, compared = 0;
  std::string first;
  for (int k = 0; k < 50; ++k) {
    const std::string& id = ids[rng() % ids.size()];
    uint32_t p = primes[rng() % primes.size()];
    int64_t param = static_cast<int64_t>(rng() % p);
    Verdict v[2];
    for (int i = 0; i < 2; ++i) {
      SweepConfig c;
      c.identity = id;
      c.p_min = c.p_max = p;
      c.precision = 3 + i;
      c.params = {param};
      c.infinity = 1;
      v[i] = sweep(c).results.at(0);
    }
    std::string where = id + "@p=" + std::to_string(p) + ",param=" + std::to_string(param);
    bool same = v[0].skip == v[1].skip && v[0].equal == v[1].equal;
    if (!same) {
      ++mismatched;
      if (first.empty()) first = where;
      continue;
    }
    if (v[0].skipped()) continue;
    ++compared;
    int A = v[0].precision;
    bool ok = v[1].lhs_value && v[1].rhs_value && v[1].lhs_value->truncate(A).str() == v[0].lhs &&
              v[1].rhs_value->truncate(A).str() == v[0].rhs;
    if (!ok) {
      ++truncation_bad;
      if (first.empty()) first = where;
    }
  }
  Outcome o;
  o.pass = mismatched == 0 && truncation_bad == 0;
  o.detail = "50 triples, " + std::to_string(compared) + " non-skipped, verdict mismatches " +
             std::to_string(mismatched) + ", truncation mismatches " + std::to_string(truncation_bad) +
             (first.empty() ? "" : ", first at " + first);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "thm-1.1 sweep, 5 <= p <= 47, N = 3", c1},
      {2, "thm-1.2/1.3/1.4 sweeps and cross-checks, 5 <= p <= 47", c2},
      {3, "thm-1.5 single infinity convention and Euler equality", c3},
      {4, "thm-1.6 sweep, 5 <= p <= 47", c4},
      {5, "thm-1.7/1.8 sweeps, 5 <= p <= 31", c5},
      {6, "Gross-Koblitz, p in {5, 7, 11, 13}", c6},
      {7, "Hasse-Davenport, g(chi)g(chi-bar), Fuselier, Gauss-Jacobi", c7},
      {8, "floor lemmas p <= 100, gamma lemmas p <= 31", c8},
      {9, "point-count fixtures", c9},
      {10, "precision monotonicity N = 3 vs N = 4", c10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %2d %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
