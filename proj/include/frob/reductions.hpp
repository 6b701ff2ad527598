#pragma once

// Executable reduction constructions between subadditivity testing, unbounded
// subset sum and the Frobenius problem, plus the helpers the validators use.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "frob/instance.hpp"
#include "frob/minconv.hpp"
#include "frob/oracle.hpp"

namespace frob::reductions {

struct Provenance {
  std::vector<Value> sequence;  // entries a[1..n-1]
  Value big_m = 0;              // M = 2 (max a[i] + n)
  std::string construction;
};

/// Constructed instance. `target` is a_0 (M-1) - 1; `threshold` is the
/// Frobenius comparison bound a_0 M - 1 (set for the Frobenius construction).
struct ReductionInstance {
  Instance instance;
  std::optional<Value> target;
  std::optional<Value> threshold;
  Provenance provenance;
  /// The "bar" items a_0 (M - a[i]) - 2i - 1, in index order i = 1..n-1.
  std::vector<Value> bar_items;
};

/// The cyclic sequence a[0..n-1] behind a reduction input, with a[0] = 0.
inline minconv::CostSeq with_zero_head(std::span<const Value> seq) {
  minconv::CostSeq a{0};
  a.insert(a.end(), seq.begin(), seq.end());
  return a;
}

namespace detail {

inline ReductionInstance build(std::span<const Value> seq, std::string name) {
  if (seq.empty()) throw InvalidInput("reduction needs a sequence a[1..n-1] with n >= 2");
  for (Value v : seq)
    if (v < 1) throw InvalidInput("reduction sequence values must be >= 1, got " + std::to_string(v));
  const auto n = static_cast<Value>(seq.size()) + 1;
  const Value a0 = 2 * n;
  const Value big_m = 2 * (*std::max_element(seq.begin(), seq.end()) + n);
  std::vector<Value> items{a0};
  std::vector<Value> bars;
  for (Value i = 1; i < n; ++i) {
    const Value ai = seq[static_cast<std::size_t>(i - 1)];
    if (2 * ai >= big_m) throw InvalidInput("sequence value too large for M");
    items.push_back(a0 * ai + 2 * i);
    bars.push_back(a0 * (big_m - ai) - 2 * i - 1);
  }
  items.insert(items.end(), bars.begin(), bars.end());
  // a_1 = 2 (mod a_0) makes gcd(a_0, a_1) = 2 and the bar items are odd
  if (frob::detail::gcd_of(items) != 1) throw std::logic_error("reduction produced an instance with gcd != 1");
  ReductionInstance out{Instance(std::move(items)), a0 * (big_m - 1) - 1, std::nullopt,
                        Provenance{std::vector<Value>(seq.begin(), seq.end()), big_m, std::move(name)},
                        std::move(bars)};
  return out;
}

}  // namespace detail

/// Subset-sum instance whose target a_0 (M-1) - 1 is feasible iff the
/// sequence has a cyclic subadditivity violation (see wrap_penalized_violation
/// for the exact condition the construction realizes).
inline ReductionInstance subadd_to_uss(std::span<const Value> seq) { return detail::build(seq, "subadd_to_uss"); }

/// Same items; threshold a_0 M - 1 for the Frobenius comparison.
inline ReductionInstance subadd_to_frobenius(std::span<const Value> seq) {
  auto out = detail::build(seq, "subadd_to_frobenius");
  out.threshold = out.instance.smallest() * out.provenance.big_m - 1;
  return out;
}

/// Cyclic violation in which a pair whose index sum wraps past n must beat the
/// target entry by at least 2: a[i] + a[j] + [i + j >= n] < a[(i+j) mod n],
/// 1 <= i, j < n. A wrapping pair contributes an extra a_0 to the item sum, so
/// this is the condition under which the constructed target is reachable.
inline std::optional<minconv::Violation> wrap_penalized_violation(std::span<const Value> seq) {
  const auto a = with_zero_head(seq);
  const std::size_t n = a.size();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const Value penalty = i + j >= n ? 1 : 0;
      if (a[i] + a[j] + penalty < a[(i + j) % n]) return minconv::Violation{i, j};
    }
  return std::nullopt;
}

/// Appends R a_0 + (2^i mod a_0) for 0 <= i <= floor(log2 a_0), R minimal with
/// R a_0 > t. Every new item exceeds t, so feasibility of t is unchanged.
inline Instance pad_instance(const Instance& inst, Value t) {
  const Value a0 = inst.smallest();
  if (a0 < 2) throw InvalidInput("pad_instance needs a_0 >= 2");
  if (inst.largest() > t) throw InvalidInput("pad_instance needs every item <= t");
  const Value r = t / a0 + 1;
  std::vector<Value> items(inst.items().begin(), inst.items().end());
  const int imax = frob::detail::floor_log2(static_cast<std::uint64_t>(a0));
  Value pow = 1 % a0;
  for (int i = 0; i <= imax; ++i) {
    items.push_back(r * a0 + pow);
    pow = (pow * 2) % a0;
  }
  return Instance(std::move(items));
}

/// F(padded) bound used by the validators: 3 t (floor(log2 t) + 1).
inline Value padded_frobenius_bound(Value t) {
  return 3 * t * (frob::detail::floor_log2(static_cast<std::uint64_t>(t)) + 1);
}

using FrobeniusFn = std::function<Value(const Instance&)>;

/// Which items the early-exit test and the odd item 2F+1 are built from.
enum class FrobeniusBase {
  all_items,      // F(a_0, ..., a_n)
  drop_smallest,  // F(a_1, ..., a_n), literal reading; needs gcd(a_1..a_n) = 1
};

struct DoublingOutcome {
  bool feasible = false;
  bool early_exit = false;
  std::size_t frobenius_calls = 0;
  Value base_frobenius = 0;     // F of the base items
  Value doubled_frobenius = 0;  // F(2a_0, ..., 2a_n, 2F+1)
  Value extended_frobenius = 0; // F(..., F(...) - 2t)
};

/// Decides subset sum with at most three Frobenius calls: t > F(base) is
/// feasible outright; otherwise compare F(2a, 2F+1, F(2a, 2F+1) - 2t) against
/// F(2a, 2F+1).
inline DoublingOutcome uss_via_frobenius_detailed(const Instance& inst, Value t, const FrobeniusFn& frobenius_fn,
                                                  FrobeniusBase base = FrobeniusBase::all_items) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  DoublingOutcome out;
  std::vector<Value> base_items(inst.items().begin(), inst.items().end());
  if (base == FrobeniusBase::drop_smallest) {
    base_items.erase(base_items.begin());
    if (base_items.empty() || frob::detail::gcd_of(base_items) != 1)
      throw InvalidInput("F(a_1, ..., a_n) is undefined: gcd(a_1, ..., a_n) != 1");
  }
  out.base_frobenius = frobenius_fn(Instance(base_items));
  ++out.frobenius_calls;
  if (t > out.base_frobenius) {
    out.feasible = out.early_exit = true;
    return out;
  }
  std::vector<Value> doubled;
  for (Value a : inst.items()) doubled.push_back(2 * a);
  doubled.push_back(2 * out.base_frobenius + 1);
  out.doubled_frobenius = frobenius_fn(Instance(doubled));
  ++out.frobenius_calls;
  const Value extra = out.doubled_frobenius - 2 * t;
  if (extra <= 0) throw InvalidInput("degenerate target: F(doubled) - 2t = " + std::to_string(extra));
  doubled.push_back(extra);
  out.extended_frobenius = frobenius_fn(Instance(doubled));
  ++out.frobenius_calls;
  out.feasible = out.extended_frobenius < out.doubled_frobenius;
  return out;
}

inline bool uss_via_frobenius(const Instance& inst, Value t, const FrobeniusFn& frobenius_fn,
                              FrobeniusBase base = FrobeniusBase::all_items) {
  return uss_via_frobenius_detailed(inst, t, frobenius_fn, base).feasible;
}

/// n - 1 values in [1, vmax] for a random n in [2, max_n].
inline std::vector<Value> random_sequence(std::size_t max_n, Value vmax, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nd(2, std::max<std::size_t>(2, max_n));
  std::uniform_int_distribution<Value> vd(1, vmax);
  std::vector<Value> seq(nd(rng) - 1);
  for (Value& v : seq) v = vd(rng);
  return seq;
}

/// Number of bar items used by a witness solution of a constructed instance.
inline std::size_t bar_items_used(const ReductionInstance& red, const Solution& sol) {
  std::size_t used = 0;
  for (std::size_t i = 0; i < sol.multiplicities.size(); ++i)
    if (std::find(red.bar_items.begin(), red.bar_items.end(), red.instance[i]) != red.bar_items.end())
      used += static_cast<std::size_t>(sol.multiplicities[i]);
  return used;
}

}  // namespace frob::reductions
