#pragma once

// Brute-force reference algorithms. Everything here is O(n * t) or
// O(n * F) on plain byte arrays and is meant for correctness checks only.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frob/instance.hpp"

namespace frob::oracle {

namespace detail {

// reach[v] for v in [0, limit]
inline std::vector<std::uint8_t> reachable_upto(const Instance& inst, Value limit) {
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(limit) + 1, 0);
  reach[0] = 1;
  for (Value v = 1; v <= limit; ++v)
    for (Value a : inst.items()) {
      if (a > v) break;
      if (reach[v - a]) {
        reach[v] = 1;
        break;
      }
    }
  return reach;
}

}  // namespace detail

/// Forward Bellman DP over 0..t.
inline bool bellman_feasible(const Instance& inst, Value t) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  if (t == 0) return true;
  return detail::reachable_upto(inst, t)[t] != 0;
}

/// Sieve horizon that is guaranteed to contain every minimal residue-class
/// target: min(Erdos-Graham, a_0 * a_n) + a_n.
inline Value table_horizon(const Instance& inst) {
  const Value eg = erdos_graham_bound(inst);
  const Value prod = inst.smallest() * inst.largest();
  return std::min(eg, prod) + inst.largest();
}

inline ResidueTable oracle_residue_table(const Instance& inst) {
  const Value a0 = inst.smallest();
  if (a0 == 1) return ResidueTable{};
  ResidueTable table{a0, std::vector<Value>(static_cast<std::size_t>(a0), -1)};
  const auto reach = detail::reachable_upto(inst, table_horizon(inst));
  Value missing = a0;
  for (Value v = 0; v < static_cast<Value>(reach.size()) && missing > 0; ++v) {
    if (!reach[v]) continue;
    Value& e = table.entries[v % a0];
    if (e < 0) {
      e = v;
      --missing;
    }
  }
  if (missing != 0) throw std::logic_error("oracle sieve horizon too small");
  return table;
}

inline Value oracle_frobenius(const Instance& inst) { return oracle_residue_table(inst).frobenius(); }

inline bool feasible_via_table(const ResidueTable& table, Value t) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  return t >= table.entries[static_cast<std::size_t>(t % table.modulus)];
}

/// Any witness for t, via the DP predecessor array; nullopt iff infeasible.
inline std::optional<Solution> reconstruct_solution(const Instance& inst, Value t) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  // pred[v] = index of an item that reaches v from a reachable v - a_i, or -1
  std::vector<int> pred(static_cast<std::size_t>(t) + 1, -1);
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(t) + 1, 0);
  reach[0] = 1;
  for (Value v = 1; v <= t; ++v)
    for (std::size_t i = 0; i < inst.size() && inst[i] <= v; ++i)
      if (reach[v - inst[i]]) {
        reach[v] = 1;
        pred[v] = static_cast<int>(i);
        break;
      }
  if (!reach[t]) return std::nullopt;
  Solution sol{std::vector<Value>(inst.size(), 0)};
  for (Value v = t; v > 0; v -= inst[pred[v]]) ++sol.multiplicities[pred[v]];
  return sol;
}

/// The lexicographically maximal solution (maximize x_0, then x_1, ...).
/// suffix[k][r] tells whether r is a combination of a_k..a_n, so each
/// greedy step is a lookup instead of a search.
inline std::optional<Solution> lexmax_solution(const Instance& inst, Value t) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  const std::size_t m = inst.size();
  const auto len = static_cast<std::size_t>(t) + 1;
  std::vector<std::vector<std::uint8_t>> suffix(m + 1, std::vector<std::uint8_t>(len, 0));
  suffix[m][0] = 1;
  for (std::size_t k = m; k-- > 0;) {
    const Value a = inst[k];
    auto& cur = suffix[k];
    const auto& next = suffix[k + 1];
    for (std::size_t r = 0; r < len; ++r)
      cur[r] = next[r] || (static_cast<Value>(r) >= a && cur[r - a]);
  }
  if (!suffix[0][t]) return std::nullopt;
  Solution sol{std::vector<Value>(m, 0)};
  Value rest = t;
  for (std::size_t k = 0; k < m; ++k) {
    Value x = rest / inst[k];
    while (!suffix[k + 1][rest - x * inst[k]]) --x;
    sol.multiplicities[k] = x;
    rest -= x * inst[k];
  }
  return sol;
}

struct StructureReport {
  Solution witness;
  Value product = 1;        // prod_{i>=1} (x_i + 1), saturated
  std::size_t support = 0;  // |supp(x)|, x_0 included
  bool product_ok = false;  // product <= a_0
  bool support_ok = false;  // support <= log2(a_0) + 1
  bool bound_ok() const { return product_ok && support_ok; }
};

/// Checks the support-structure bounds on the lexmax witness of a feasible t.
inline StructureReport check_structure_bound(const Instance& inst, Value t) {
  auto sol = lexmax_solution(inst, t);
  if (!sol) throw InvalidInput("target " + std::to_string(t) + " is infeasible");
  StructureReport rep;
  const Value a0 = inst.smallest();
  for (std::size_t i = 1; i < sol->multiplicities.size(); ++i) {
    const Value f = sol->multiplicities[i] + 1;
    rep.product = rep.product > (kMaxItem << 20) / f ? (kMaxItem << 20) : rep.product * f;
  }
  rep.support = sol->support();
  rep.product_ok = rep.product <= a0;
  // support <= log2(a0) + 1  <=>  2^(support-1) <= a0
  rep.support_ok = rep.support == 0 || (rep.support - 1 < 62 && (Value{1} << (rep.support - 1)) <= a0);
  rep.witness = std::move(*sol);
  return rep;
}

}  // namespace frob::oracle
