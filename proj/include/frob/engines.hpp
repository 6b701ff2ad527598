#pragma once

// Uniform entry points over the four solver families.

#include <array>
#include <string>
#include <string_view>

#include "frob/instance.hpp"
#include "frob/minconv.hpp"
#include "frob/oracle.hpp"
#include "frob/sumset.hpp"

namespace frob {

enum class Engine { sumset, minconv, roundrobin, oracle };

inline constexpr std::array<Engine, 4> kAllEngines{Engine::sumset, Engine::minconv, Engine::roundrobin,
                                                   Engine::oracle};

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::sumset: return "sumset";
    case Engine::minconv: return "minconv";
    case Engine::roundrobin: return "roundrobin";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

inline Engine parse_engine(std::string_view name) {
  for (Engine e : kAllEngines)
    if (engine_name(e) == name) return e;
  throw InvalidInput("unknown engine '" + std::string(name) + "' (expected sumset|minconv|roundrobin|oracle)");
}

struct EngineRun {
  Value value = 0;  // Frobenius number, or 0/1 for subset sum
  ResidueTable table;
  std::optional<std::size_t> conv_calls;
  std::optional<std::size_t> advance_calls;
};

inline EngineRun all_targets(const Instance& inst, Engine e) {
  EngineRun run;
  switch (e) {
    case Engine::sumset: {
      sumset::Stats st;
      run.table = sumset::alltargets_sumset(inst, &st);
      run.advance_calls = st.advance_calls;
      break;
    }
    case Engine::minconv: {
      auto res = minconv::alltargets_minconv(inst);
      run.table = std::move(res.table);
      run.conv_calls = res.conv_calls;
      break;
    }
    case Engine::roundrobin: run.table = sumset::round_robin(inst); break;
    case Engine::oracle: run.table = oracle::oracle_residue_table(inst); break;
  }
  run.value = run.table.frobenius();
  return run;
}

/// Frobenius number; the sumset engine uses doubling + binary search and
/// leaves `table` empty.
inline EngineRun frobenius_number(const Instance& inst, Engine e) {
  if (e != Engine::sumset) return all_targets(inst, e);
  EngineRun run;
  const auto res = sumset::frobenius_detailed(inst);
  run.value = res.value;
  run.advance_calls = res.stats.advance_calls;
  return run;
}

inline bool subset_sum(const Instance& inst, Value t, Engine e) {
  switch (e) {
    case Engine::sumset: return sumset::uss_decide(inst, t);
    case Engine::oracle: return oracle::bellman_feasible(inst, t);
    default: return oracle::feasible_via_table(all_targets(inst, e).table, t);
  }
}

}  // namespace frob
