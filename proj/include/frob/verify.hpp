#pragma once

// Cross-engine equivalence suite and reduction validators behind the CLI
// `verify` and `reduce --verify` subcommands.
//
// Gating rows must have zero failures. Non-gating rows record how a literal
// formulation behaves next to the one that is gated on.

#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frob/engines.hpp"
#include "frob/instance.hpp"
#include "frob/minconv.hpp"
#include "frob/oracle.hpp"
#include "frob/reductions.hpp"
#include "frob/sumset.hpp"

namespace frob::verify {

struct CheckRow {
  std::string name;
  bool gating = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
  bool passed() const { return !gating || failures == 0; }
};

struct Report {
  std::deque<CheckRow> rows;  // stable references for row()
  std::optional<std::string> counterexample;  // minimized, reproducible input

  bool ok() const {
    for (const auto& r : rows)
      if (!r.passed()) return false;
    return true;
  }
  CheckRow& row(const std::string& name, bool gating = true) {
    for (auto& r : rows)
      if (r.name == name) return r;
    rows.push_back(CheckRow{name, gating, 0, 0, {}});
    return rows.back();
  }
};

using TableFn = std::function<ResidueTable(const Instance&)>;

struct Options {
  std::size_t instances = 500;
  std::size_t max_n = 8;
  Value a_max = 200;
  std::uint64_t seed = 1;
  std::size_t targets_per_instance = 20;
  bool structure = false;
  bool reductions = true;
  std::size_t sequences = 200;
  std::size_t seq_max_n = 12;
  Value seq_max_value = 20;
  /// Replaces the sumset residue-table engine; used to inject faults.
  TableFn sumset_table_override;
};

/// Random corpus shared by the equivalence checks: n in [1, max_n],
/// items <= a_max, a_0 >= 2.
inline std::vector<Instance> corpus(std::size_t count, std::size_t max_n, Value a_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  std::vector<Instance> out;
  while (out.size() < count) {
    auto inst = random_instance(nd(rng), a_max, rng());
    if (inst.smallest() >= 2) out.push_back(std::move(inst));
  }
  return out;
}

/// Drops items while `fails` keeps holding and the instance stays valid.
inline Instance minimize(Instance inst, const std::function<bool(const Instance&)>& fails) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < inst.size() && inst.size() > 2; ++i) {
      std::vector<Value> items(inst.items().begin(), inst.items().end());
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
      if (frob::detail::gcd_of(items) != 1 || items.front() < 2) continue;
      Instance smaller(std::move(items));
      bool still = false;
      try {
        still = fails(smaller);
      } catch (const std::exception&) {
        still = true;
      }
      if (still) {
        inst = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return inst;
}

inline void run_engine_checks(const Options& opt, Report& rep) {
  const TableFn sumset_table = opt.sumset_table_override
                                   ? opt.sumset_table_override
                                   : TableFn([](const Instance& i) { return sumset::alltargets_sumset(i); });
  auto tables_disagree = [&](const Instance& inst) {
    const auto ref = oracle::oracle_residue_table(inst);
    return !(sumset::round_robin(inst) == ref && minconv::alltargets_minconv(inst).table == ref &&
             sumset_table(inst) == ref && sumset::alltargets_interval_walk(inst) == ref);
  };

  auto& tables = rep.row("residue tables: oracle = roundrobin = minconv = sumset = interval walk");
  auto& budget = rep.row("minconv calls <= ceil(log2 log2 a_0) + 1");
  auto& eg = rep.row("F <= Erdos-Graham bound");
  auto& frob_row = rep.row("sumset Frobenius = oracle Frobenius");
  auto& edge = rep.row("F infeasible, F+1..F+a_n feasible");
  auto& uss = rep.row("uss_decide = Bellman on sampled targets");
  auto& walk_mono = rep.row("popcount non-decreasing along A(1), A(2), ...");
  CheckRow* structure = opt.structure ? &rep.row("lexmax witness: prod(x_i+1) <= a_0, |supp| <= log2 a_0 + 1") : nullptr;

  std::mt19937_64 rng(opt.seed ^ 0x5eedull);
  for (const Instance& inst : corpus(opt.instances, opt.max_n, opt.a_max, opt.seed)) {
    const auto desc = [&] { return serialize(inst); };
    const auto ref = oracle::oracle_residue_table(inst);
    const Value f = ref.frobenius();

    bool same = false;
    try {
      same = !tables_disagree(inst);
    } catch (const std::exception&) {
      same = false;
    }
    tables.record(same, desc);
    if (!same && !rep.counterexample) rep.counterexample = serialize(minimize(inst, tables_disagree));

    const auto mc = minconv::alltargets_minconv(inst);
    budget.record(mc.conv_calls <= minconv::closure_call_budget(inst.smallest()),
                  [&] { return desc() + " calls=" + std::to_string(mc.conv_calls); });
    eg.record(f <= erdos_graham_bound(inst), desc);
    frob_row.record(sumset::frobenius(inst) == f, desc);

    const Value eg_bound = erdos_graham_bound(inst);
    const Value horizon = std::max<Value>(4 * eg_bound, f + inst.largest() + 1);
    const auto reach = oracle::detail::reachable_upto(inst, horizon);
    bool edge_ok = f < 0 || !reach[f];
    for (Value k = 1; k <= inst.largest(); ++k) edge_ok = edge_ok && reach[f + k];
    edge.record(edge_ok, desc);

    std::uniform_int_distribution<Value> td(0, horizon);
    for (std::size_t s = 0; s < opt.targets_per_instance; ++s) {
      const Value t = s == 0 ? std::max<Value>(f, 0) : td(rng);
      uss.record(sumset::uss_decide(inst, t) == (reach[t] != 0),
                 [&] { return desc() + " t=" + std::to_string(t); });
      if (structure && reach[t]) {
        const auto sr = oracle::check_structure_bound(inst, t);
        structure->record(sr.bound_ok(), [&] { return desc() + " t=" + std::to_string(t); });
      }
    }

    const sumset::IntervalAdder adder(inst);
    const auto first = sumset::base_interval(inst);
    auto cur = first;
    bool mono = true;
    while (!cur.full()) {
      auto next = adder(cur, first);
      mono = mono && next.count() >= cur.count();
      cur = std::move(next);
    }
    walk_mono.record(mono, desc);
  }
}

inline void run_reduction_checks(const Options& opt, Report& rep) {
  using namespace reductions;
  auto& t5 = rep.row("subset-sum construction: feasible <=> wrap-penalized violation");
  auto& t5_lit = rep.row("[observed] subset-sum construction: feasible <=> cyclic violation", false);
  auto& t6 = rep.row("Frobenius construction: F < a_0(M-1)-1 <=> wrap-penalized violation");
  auto& t6_lit = rep.row("[observed] Frobenius construction: F < a_0 M - 1 <=> cyclic violation", false);
  auto& obs1 = rep.row("witnesses use exactly one bar item");
  auto& pad_feas = rep.row("padding preserves feasibility of t");
  auto& pad_bound = rep.row("F(padded) <= 3 t (floor(log2 t) + 1)");
  auto& alg5 = rep.row("uss_via_frobenius (all items) = Bellman");
  auto& alg5_lit = rep.row("[observed] uss_via_frobenius (a_1..a_n) = Bellman where defined", false);
  auto& doubled_row = rep.row("F(2a, 2F+1) = 4F + 1");
  auto& four = rep.row("[observed] F(a) = 4 F(2a, 2F+1)", false);

  std::mt19937_64 rng(opt.seed ^ 0xabcdefull);
  for (std::size_t s = 0; s < opt.sequences; ++s) {
    const auto seq = random_sequence(opt.seq_max_n, opt.seq_max_value, rng);
    const auto red = subadd_to_frobenius(seq);
    const auto desc = [&] {
      std::string d = "seq=";
      for (Value v : seq) d += std::to_string(v) + ' ';
      return d;
    };
    const bool cyclic = minconv::is_mod_subadditive(with_zero_head(seq)).has_value();
    const bool wrap = wrap_penalized_violation(seq).has_value();
    const auto table = sumset::round_robin(red.instance);
    const bool feasible = oracle::feasible_via_table(table, *red.target);
    const Value f = table.frobenius();
    t5.record(feasible == wrap, desc);
    t5_lit.record(feasible == cyclic, desc);
    t6.record((f < *red.target) == wrap, desc);
    t6_lit.record((f < *red.threshold) == cyclic, desc);
    if (feasible) {
      const auto sol = oracle::reconstruct_solution(red.instance, *red.target);
      obs1.record(sol && bar_items_used(red, *sol) == 1, desc);
    }
  }

  const FrobeniusFn sumset_f = [](const Instance& i) { return sumset::frobenius(i); };
  for (std::size_t s = 0; s < opt.sequences; ++s) {
    const auto inst = random_instance(1 + rng() % 4, 40, rng());
    if (inst.smallest() < 2) continue;
    const auto desc = [&] { return serialize(inst); };
    // padding, with t in [a_n, 5 a_n]
    const Value t = inst.largest() + static_cast<Value>(rng() % static_cast<std::uint64_t>(4 * inst.largest() + 1));
    const auto padded = pad_instance(inst, t);
    pad_feas.record(oracle::bellman_feasible(inst, t) == oracle::bellman_feasible(padded, t),
                    [&] { return desc() + " t=" + std::to_string(t); });
    pad_bound.record(sumset::round_robin(padded).frobenius() <= padded_frobenius_bound(t),
                     [&] { return desc() + " t=" + std::to_string(t); });

    const Value f = sumset::round_robin(inst).frobenius();
    const Value q = static_cast<Value>(rng() % static_cast<std::uint64_t>(f + 1));
    const bool truth = oracle::bellman_feasible(inst, q);
    const auto out = uss_via_frobenius_detailed(inst, q, sumset_f);
    alg5.record(out.feasible == truth, [&] { return desc() + " t=" + std::to_string(q); });
    std::vector<Value> rest(inst.items().begin() + 1, inst.items().end());
    if (!rest.empty() && frob::detail::gcd_of(rest) == 1)
      alg5_lit.record(uss_via_frobenius(inst, q, sumset_f, FrobeniusBase::drop_smallest) == truth,
                      [&] { return desc() + " t=" + std::to_string(q); });
    if (!out.early_exit) {
      std::vector<Value> doubled;
      for (Value a : inst.items()) doubled.push_back(2 * a);
      doubled.push_back(2 * out.base_frobenius + 1);
      const Value fd = sumset::frobenius(Instance(doubled));
      doubled_row.record(fd == 4 * out.base_frobenius + 1, desc);
      four.record(out.base_frobenius == 4 * fd, desc);
    }
  }
}

inline Report run(const Options& opt) {
  Report rep;
  run_engine_checks(opt, rep);
  if (opt.reductions) run_reduction_checks(opt, rep);
  return rep;
}

inline std::string format_report(const Report& rep) {
  std::ostringstream os;
  for (const auto& r : rep.rows) {
    const char* status = !r.gating ? "INFO" : (r.failures == 0 ? "PASS" : "FAIL");
    os << status << "  " << r.name << "  (" << r.cases - r.failures << "/" << r.cases << ")";
    if (r.failures) os << "  first: " << r.first_failure;
    os << '\n';
  }
  return os.str();
}

}  // namespace frob::verify
