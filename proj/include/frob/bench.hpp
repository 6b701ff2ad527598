#pragma once

// Benchmark corpus and CSV rows. Timing is the median of `reps` runs on
// steady_clock; everything except wall_ns is a pure function of the options.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "frob/engines.hpp"
#include "frob/oracle.hpp"

namespace frob::bench {

struct Options {
  std::vector<Value> sizes{1000, 10000, 100000};  // a_n per corpus cell
  std::size_t per_size = 3;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::vector<Engine> engines{Engine::sumset, Engine::roundrobin, Engine::minconv};
  std::size_t reps = 3;
  bool omit_timing = false;
  /// Engines with quadratic cost in a_0 (minconv) are skipped above this.
  Value max_quadratic_a0 = 5000;
  /// Oracle skipped when its sieve horizon exceeds this.
  Value max_oracle_horizon = 50'000'000;
};

struct Row {
  std::size_t instance_id = 0;
  std::size_t n = 0;
  Value a0 = 0;
  Value an = 0;
  Value frobenius = 0;
  Engine engine = Engine::sumset;
  std::int64_t wall_ns = 0;
  std::optional<std::size_t> conv_calls;
  std::optional<std::size_t> advance_calls;
};

inline constexpr const char* kCsvHeader = "instance_id,n,a_0,a_n,F,engine,wall_ns,conv_calls,advance_calls";

inline std::string to_csv(const Row& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  return std::to_string(r.instance_id) + ',' + std::to_string(r.n) + ',' + std::to_string(r.a0) + ',' +
         std::to_string(r.an) + ',' + std::to_string(r.frobenius) + ',' + std::string(engine_name(r.engine)) + ',' +
         std::to_string(r.wall_ns) + ',' + opt(r.conv_calls) + ',' + opt(r.advance_calls);
}

inline std::vector<Instance> make_corpus(const Options& opt) {
  std::vector<Instance> out;
  std::mt19937_64 rng(opt.seed);
  for (Value an : opt.sizes)
    for (std::size_t k = 0; k < opt.per_size; ++k) out.push_back(random_instance_pinned(opt.n, an, rng()));
  return out;
}

inline bool skipped(const Instance& inst, Engine e, const Options& opt) {
  if (e == Engine::minconv) return inst.smallest() > opt.max_quadratic_a0;
  if (e == Engine::oracle) return oracle::table_horizon(inst) > opt.max_oracle_horizon;
  return false;
}

/// Runs every (instance, engine) cell; `on_skip` is told about cells left out.
inline std::vector<Row> run(const Options& opt,
                            const std::function<void(std::size_t, Engine)>& on_skip = {}) {
  std::vector<Row> rows;
  const auto corpus = make_corpus(opt);
  for (std::size_t id = 0; id < corpus.size(); ++id) {
    const Instance& inst = corpus[id];
    for (Engine e : opt.engines) {
      if (skipped(inst, e, opt)) {
        if (on_skip) on_skip(id, e);
        continue;
      }
      std::vector<std::int64_t> times;
      EngineRun last;
      for (std::size_t rep = 0; rep < std::max<std::size_t>(1, opt.reps); ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        last = frobenius_number(inst, e);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      }
      std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
      rows.push_back(Row{id, inst.n(), inst.smallest(), inst.largest(), last.value, e,
                         opt.omit_timing ? 0 : times[times.size() / 2], last.conv_calls, last.advance_calls});
    }
  }
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << to_csv(r) << '\n';
}

}  // namespace frob::bench
