// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is exact; runtime limits are part of the pass
// condition where one is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "frob/frob.hpp"

using frob::Instance;
using frob::Value;
namespace sumset = frob::sumset;
namespace oracle = frob::oracle;
namespace minconv = frob::minconv;
namespace reductions = frob::reductions;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.ok = false;
    out.detail += " [over the " + std::to_string(static_cast<int>(limit_s)) + " s limit]";
  }
  if (!out.ok) ++failed;
  std::printf("%s criterion %2d: %s -- %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

// Instances shared by criteria 2, 4 and 9: n <= 8, a_n <= 200.
const std::vector<Instance>& equivalence_corpus() {
  static const std::vector<Instance> corpus = [] {
    std::vector<Instance> out;
    std::mt19937_64 rng(2024);
    while (out.size() < 500) {
      auto inst = frob::random_instance(1 + rng() % 8, 200, rng());
      if (inst.smallest() >= 2) out.push_back(std::move(inst));
    }
    return out;
  }();
  return corpus;
}

}  // namespace

int main() {
  criterion(1, "two-item closed form a_0 a_1 - a_0 - a_1, every engine", 5, [] {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Value> d(1, 500);
    std::size_t pairs = 0, good = 0;
    while (pairs < 100) {
      Value a = d(rng), b = d(rng);
      if (a == b || std::gcd(a, b) != 1) continue;
      ++pairs;
      const Instance inst({a, b});
      bool all = true;
      for (auto e : frob::kAllEngines) all = all && frob::frobenius_number(inst, e).value == a * b - a - b;
      good += all;
    }
    return Outcome{good == pairs, ratio(good, pairs) + " pairs"};
  });

  criterion(2, "residue tables: oracle = round_robin = minconv = sumset", 60, [] {
    std::size_t good = 0;
    const auto& corpus = equivalence_corpus();
    for (const auto& inst : corpus) {
      const auto ref = oracle::oracle_residue_table(inst);
      good += sumset::round_robin(inst) == ref && minconv::alltargets_minconv(inst).table == ref &&
              sumset::alltargets_sumset(inst) == ref && sumset::alltargets_interval_walk(inst) == ref;
    }
    return Outcome{good == corpus.size(), ratio(good, corpus.size()) + " instances"};
  });

  criterion(3, "uss_decide = Bellman, 50 instances x 200 targets up to 4x the Erdos-Graham bound", 60, [] {
    std::mt19937_64 rng(3);
    std::size_t cases = 0, good = 0;
    for (int k = 0; k < 50;) {
      const auto inst = frob::random_instance(1 + rng() % 8, 200, rng());
      if (inst.smallest() < 2) continue;
      ++k;
      const Value horizon = 4 * frob::erdos_graham_bound(inst);
      const auto reach = oracle::detail::reachable_upto(inst, horizon);
      std::uniform_int_distribution<Value> td(0, horizon);
      for (int s = 0; s < 200; ++s, ++cases) {
        const Value t = td(rng);
        good += sumset::uss_decide(inst, t) == (reach[t] != 0);
      }
    }
    return Outcome{good == cases, ratio(good, cases) + " targets"};
  });

  criterion(4, "minconv closure uses <= ceil(log2 log2 a_0) + 1 convolutions", 0, [] {
    std::size_t good = 0, worst = 0;
    const auto& corpus = equivalence_corpus();
    for (const auto& inst : corpus) {
      const auto calls = minconv::alltargets_minconv(inst).conv_calls;
      worst = std::max(worst, calls);
      good += calls <= minconv::closure_call_budget(inst.smallest());
    }
    return Outcome{good == corpus.size(), ratio(good, corpus.size()) + ", max calls " + std::to_string(worst)};
  });

  criterion(5, "lexmax witness: prod(x_i+1) <= a_0 and |supp| <= log2 a_0 + 1", 120, [] {
    std::mt19937_64 rng(5);
    std::size_t cases = 0, feasible = 0, good = 0;
    while (cases < 10000) {
      const auto inst = frob::random_instance(1 + rng() % 6, 100, rng());
      if (inst.smallest() > 50 || inst.smallest() < 2) continue;
      const auto reach = oracle::detail::reachable_upto(inst, 2000);
      std::uniform_int_distribution<Value> td(0, 2000);
      for (int s = 0; s < 50; ++s, ++cases) {
        const Value t = td(rng);
        if (!reach[t]) continue;
        ++feasible;
        good += oracle::check_structure_bound(inst, t).bound_ok();
      }
    }
    return Outcome{good == feasible, ratio(good, feasible) + " feasible of " + std::to_string(cases) + " cases"};
  });

  criterion(6, "cyclic violation of [0]+a <=> feasible at a_0(M-1)-1 <=> F < a_0 M - 1", 120, [] {
    std::mt19937_64 rng(6);
    std::size_t uss_good = 0, frob_good = 0, corrected = 0;
    const std::size_t total = 200;
    for (std::size_t k = 0; k < total; ++k) {
      const auto seq = reductions::random_sequence(12, 20, rng);
      const bool violation = minconv::is_mod_subadditive(reductions::with_zero_head(seq)).has_value();
      const auto red = reductions::subadd_to_frobenius(seq);
      const auto table = sumset::round_robin(red.instance);
      const bool feasible = oracle::feasible_via_table(table, *red.target);
      const Value f = sumset::frobenius(red.instance);
      uss_good += feasible == violation;
      frob_good += (f < *red.threshold) == violation;
      const bool wrap = reductions::wrap_penalized_violation(seq).has_value();
      corrected += feasible == wrap && (f < *red.target) == wrap;
    }
    return Outcome{uss_good == total && frob_good == total,
                   "feasibility " + ratio(uss_good, total) + ", Frobenius threshold " + ratio(frob_good, total) +
                       "; wrap-penalized violation with threshold a_0(M-1)-1 agrees on " + ratio(corrected, total)};
  });

  criterion(7, "uss_via_frobenius = Bellman on 100 instances with t <= F", 0, [] {
    std::mt19937_64 rng(7);
    const reductions::FrobeniusFn f_fn = [](const Instance& i) { return sumset::frobenius(i); };
    std::size_t cases = 0, good = 0;
    while (cases < 100) {
      const auto inst = frob::random_instance(1 + rng() % 4, 40, rng());
      if (inst.smallest() < 2) continue;
      const Value f = sumset::frobenius(inst);
      const Value t = static_cast<Value>(rng() % static_cast<std::uint64_t>(f + 1));
      ++cases;
      good += reductions::uss_via_frobenius(inst, t, f_fn) == oracle::bellman_feasible(inst, t);
    }
    return Outcome{good == cases, ratio(good, cases) + " cases"};
  });

  criterion(8, "padding keeps feasibility of t and F(padded) <= 3t(floor(log2 t)+1)", 0, [] {
    std::mt19937_64 rng(8);
    std::size_t cases = 0, good = 0;
    while (cases < 200) {
      const auto inst = frob::random_instance(1 + rng() % 5, 60, rng());
      if (inst.smallest() < 2) continue;
      const Value t = inst.largest() + static_cast<Value>(rng() % static_cast<std::uint64_t>(5000 - inst.largest() + 1));
      ++cases;
      const auto padded = reductions::pad_instance(inst, t);
      good += oracle::bellman_feasible(inst, t) == oracle::bellman_feasible(padded, t) &&
              sumset::round_robin(padded).frobenius() <= reductions::padded_frobenius_bound(t);
    }
    return Outcome{good == cases, ratio(good, cases) + " cases"};
  });

  criterion(9, "F <= floor(2 a_{n-1} a_n / (n+1)) - a_n", 0, [] {
    std::size_t good = 0;
    const auto& corpus = equivalence_corpus();
    for (const auto& inst : corpus) good += oracle::oracle_frobenius(inst) <= frob::erdos_graham_bound(inst);
    return Outcome{good == corpus.size(), ratio(good, corpus.size()) + " instances"};
  });

  criterion(10, "sumset Frobenius on a_n = 10^6, n = 50 under 30 s, equal to round_robin", 0, [] {
    const auto inst = frob::random_instance_pinned(50, 1'000'000, 10);
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = sumset::frobenius_detailed(inst);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Value rr = sumset::round_robin(inst).frobenius();
    char buf[160];
    std::snprintf(buf, sizeof buf, "a_0 = %lld, F = %lld, round_robin %lld, sumset %.2f s, %zu interval additions",
                  static_cast<long long>(inst.smallest()), static_cast<long long>(res.value), static_cast<long long>(rr),
                  secs, res.stats.advance_calls);
    return Outcome{res.value == rr && secs < 30.0, buf};
  });

  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
