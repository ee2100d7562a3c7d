// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Criteria whose literal statement conflicts with the fixed twist convention
// are checked as stated and, on a separate line, in corrected form.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "projgraft/projgraft.hpp"

using namespace projgraft;

namespace {

// Exact arithmetic throughout; the only tolerances are wall-clock limits.
constexpr double kLimitOracle = 60.0;
constexpr double kLimitTwistFormula = 5.0;
constexpr double kLimitChart = 1.0;
constexpr double kLimitIterated = 5.0;
constexpr double kLimitGoldman = 5.0;
constexpr double kLimitComplex = 60.0;
constexpr std::int64_t kMinOracleInstances = 300;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %-4s %s: %s [%.3f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(),
              o.detail.c_str(), secs, limit, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

Outcome from_report(const SuiteReport& r) {
  std::string detail = std::to_string(r.instances.size() - r.failures()) + "/" + std::to_string(r.instances.size()) + " instances";
  for (const auto& i : r.instances) {
    if (!i.pass) {
      detail += "; first failure " + i.name + ": " + i.detail;
      break;
    }
  }
  return {r.passed(), detail};
}

SuiteParams params(Reading reading, std::int64_t k_max = -1) {
  SuiteParams p;
  p.reading = reading;
  p.k_max = k_max;
  return p;
}

std::string complex_export(std::int64_t M, int d, unsigned threads) {
  const auto cfg = standard_configuration(1);
  return to_json(build_complex(cfg, cfg.seed(), M, d, {threads, {}})).dump(2);
}

std::string iterated_export() {
  const auto cfg = standard_configuration(1);
  nlohmann::json j;
  j["report"] = verify_suite("iterated", params(Reading::Corrected, 8)).to_json();
  j["witnesses"] = to_json(common_grafts(cfg, "b1", 1, 8));
  return j.dump(2);
}

}  // namespace

int main() {
  criterion("C1", "oracle equivalence on primitive pairs in [-5,5]", kLimitOracle, [] {
    SuiteParams p;
    p.range = 5;
    const SuiteReport r = verify_suite("oracle", p);
    Outcome o = from_report(r);
    o.ok = o.ok && static_cast<std::int64_t>(r.instances.size()) >= kMinOracleInstances;
    return o;
  });

  criterion("C2", "twist intersection formula, |k| <= 5", kLimitTwistFormula, [] {
    SuiteParams p;
    p.range = 5;
    p.k_max = 5;
    return from_report(verify_suite("twist_formula", p));
  });

  criterion("C3", "flat chart identity (2,0), k = 1..10", kLimitChart,
            [] { return from_report(verify_suite("flatsharp", params(Reading::Literal, 10))); });

  criterion("C4", "four-way identity (4,4k), |k| <= 8, and switch", kLimitChart,
            [] { return from_report(verify_suite("sharp_flat", params(Reading::Literal, 8))); });
  criterion("C4*", "same, modes mirrored for k < 0", kLimitChart,
            [] { return from_report(verify_suite("sharp_flat", params(Reading::Corrected, 8))); });

  criterion("C5", "right spiral = T_gamma, left = T_gamma^-1, k = 1..6", kLimitChart,
            [] { return from_report(verify_suite("dehn_twist", params(Reading::Literal, 6))); });
  criterion("C5*", "right spiral = T_gamma^-1, left = T_gamma", kLimitChart,
            [] { return from_report(verify_suite("dehn_twist", params(Reading::Corrected, 6))); });

  criterion("C6", "iterated connectivity with T^{2m}, |m| <= 8, witness count", kLimitIterated,
            [] { return from_report(verify_suite("iterated", params(Reading::Literal, 8))); });
  criterion("C6*", "iterated connectivity with T^{k+l}", kLimitIterated,
            [] { return from_report(verify_suite("iterated", params(Reading::Corrected, 8))); });

  criterion("C7", "two-meridian iterated identity, 0 <= l < k <= 5", kLimitIterated,
            [] { return from_report(verify_suite("two_meridian", params(Reading::Literal, 5))); });

  criterion("C8", "standard fan m = 3, l = 0..6 share one graft", kLimitChart, [] {
    SuiteParams p;
    p.m = 3;
    p.fan_length = 6;
    return from_report(verify_suite("fan", p));
  });

  criterion("C9", "Goldman round trip, 100 trials, seed 7", kLimitGoldman, [] {
    SuiteParams p;
    p.trials = 100;
    p.seed = 7;
    return from_report(verify_suite("goldman", p));
  });

  criterion("C10", "cycle rank strictly increasing in M = 1..6 at d = 2, nondecreasing in d", kLimitComplex, [] {
    const auto cfg = standard_configuration(1);
    std::string ranks;
    bool ok = true;
    std::int64_t prev = -1;
    for (std::int64_t M = 1; M <= 6; ++M) {
      const std::int64_t r = cycle_rank(build_complex(cfg, cfg.seed(), M, 2));
      ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
      ok = ok && r > prev;
      prev = r;
      std::int64_t by_depth = 0;
      for (int d = 0; d <= 3; ++d) {
        const std::int64_t rd = cycle_rank(build_complex(cfg, cfg.seed(), M, d));
        ok = ok && rd >= by_depth;
        by_depth = rd;
      }
    }
    return Outcome{ok, "ranks at d=2: " + ranks};
  });

  criterion("C11", "byte-identical exports across runs and 1/2/4/8 threads", kLimitComplex, [] {
    const std::string base = complex_export(6, 2, 1);
    bool ok = complex_export(6, 2, 1) == base;
    for (unsigned t : {2u, 4u, 8u}) ok = ok && complex_export(6, 2, t) == base;
    const std::string deep = complex_export(3, 3, 1);
    for (unsigned t : {2u, 4u, 8u}) ok = ok && complex_export(3, 3, t) == deep;
    const std::string it = iterated_export();
    ok = ok && iterated_export() == it;
    return Outcome{ok, "complex export " + std::to_string(base.size()) + " bytes, digest " + digest(base) +
                           "; iterated export digest " + digest(it)};
  });

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
