#pragma once

// (min,+) convolution, its cyclic variant, the closure that turns item sizes
// into a residue table, and (mod-)subadditivity testers.
//
// Costs are int64 with two reserved sentinels:
//   kInf     absorbs finite values under addition and compares above them;
//   kNegInf  absorbs finite values under addition and compares below them.
// kInf + kNegInf is taken to be kInf (an unreachable index stays unreachable).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frob/instance.hpp"

namespace frob::minconv {

using Cost = std::int64_t;
using CostSeq = std::vector<Cost>;

inline constexpr Cost kInf = std::numeric_limits<Cost>::max();
inline constexpr Cost kNegInf = std::numeric_limits<Cost>::min();

inline constexpr bool is_finite(Cost c) { return c != kInf && c != kNegInf; }

inline constexpr Cost add(Cost a, Cost b) {
  if (a == kInf || b == kInf) return kInf;
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return a + b;
}

/// c[k] = min_{i+j=k} a[i] + b[j], quadratic.
inline CostSeq min_plus_convolve(std::span<const Cost> a, std::span<const Cost> b) {
  if (a.empty() || b.empty()) throw InvalidInput("min_plus_convolve: empty sequence");
  CostSeq c(a.size() + b.size() - 1, kInf);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Cost ai = a[i];
    if (ai == kInf) continue;
    Cost* out = c.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) out[j] = std::min(out[j], add(ai, b[j]));
  }
  return c;
}

using Convolution = std::function<CostSeq(std::span<const Cost>, std::span<const Cost>)>;

/// Cyclic (min,+) convolution of two length-n sequences, computed by unrolling
/// both to length 2n, convolving, and folding c[i] with c[i+n].
inline CostSeq mod_min_convolve(std::span<const Cost> a, std::span<const Cost> b,
                                const Convolution& conv = min_plus_convolve) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw InvalidInput("mod_min_convolve: sequences must have equal, positive length");
  CostSeq abar(2 * n), bbar(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    abar[i] = a[i % n];
    bbar[i] = b[i % n];
  }
  const CostSeq cbar = conv(abar, bbar);
  CostSeq c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = std::min(cbar[i], cbar[i + n]);
  return c;
}

struct ClosureResult {
  ResidueTable table;
  std::size_t conv_calls = 0;
};

/// Seed sequence A over Z_{a_0}: A[r] = min{2^j a_i : i >= 1, j <= floor(log2 a_0),
/// 2^j a_i = r mod a_0}, with A[0] forced to 0.
inline CostSeq closure_seed(const Instance& inst) {
  const Value a0 = inst.smallest();
  CostSeq seed(static_cast<std::size_t>(a0), kInf);
  const int jmax = frob::detail::floor_log2(static_cast<std::uint64_t>(a0));
  for (std::size_t i = 1; i < inst.size(); ++i) {
    Value v = inst[i];
    for (int j = 0; j <= jmax; ++j, v *= 2) {
      Cost& slot = seed[static_cast<std::size_t>(v % a0)];
      slot = std::min(slot, v);
    }
  }
  seed[0] = 0;
  return seed;
}

/// Call budget for the squaring loop: ceil(log2 log2 a_0) + 1.
inline std::size_t closure_call_budget(Value a0) { return static_cast<std::size_t>(ceil_log2_log2(a0)) + 1; }

/// Residue table as the cyclic (min,+) closure of closure_seed, by repeated
/// squaring until a fixpoint or the call budget is exhausted.
inline ClosureResult alltargets_minconv(const Instance& inst, const Convolution& conv = min_plus_convolve) {
  const Value a0 = inst.smallest();
  ClosureResult out;
  if (a0 == 1) return out;
  if (static_cast<__int128>(a0) * inst.largest() >= (__int128{1} << 62))
    throw InvalidInput("a_0 * a_n too large for 64-bit residue tables");
  CostSeq cur = closure_seed(inst);
  const std::size_t budget = closure_call_budget(a0);
  while (out.conv_calls < budget) {
    CostSeq next = mod_min_convolve(cur, cur, conv);
    ++out.conv_calls;
    const bool fixpoint = next == cur;
    cur = std::move(next);
    if (fixpoint) break;
  }
  out.table.modulus = a0;
  out.table.entries.assign(cur.begin(), cur.end());
  for (Cost c : cur)
    if (c == kInf) throw std::logic_error("alltargets_minconv: unreachable residue class");
  return out;
}

/// Index pair (i, j) witnessing a[i] + a[j] < a[k].
struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {
// A pair with a kNegInf summand is never reported: such entries only stand
// in for "no constraint" targets produced by the plain->mod padding.
inline bool violates(Cost ai, Cost aj, Cost ak) {
  if (ai == kNegInf || aj == kNegInf) return false;
  return add(ai, aj) < ak;
}
}  // namespace detail

/// First pair (row-major) with i + j < n and a[i] + a[j] < a[i+j].
inline std::optional<Violation> is_subadditive(std::span<const Cost> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      if (detail::violates(a[i], a[j], a[i + j])) return Violation{i, j};
  return std::nullopt;
}

/// First pair (row-major) with a[i] + a[j] < a[(i+j) mod n].
inline std::optional<Violation> is_mod_subadditive(std::span<const Cost> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (detail::violates(a[i], a[j], a[(i + j) % n])) return Violation{i, j};
  return std::nullopt;
}

/// b[i] = a[i mod n] over 2n entries; plain violations of b <=> cyclic
/// violations of a.
inline CostSeq mod_to_plain_unrolling(std::span<const Cost> a) {
  if (a.empty()) throw InvalidInput("mod_to_plain_unrolling: empty sequence");
  CostSeq b(2 * a.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = a[i % a.size()];
  return b;
}

/// a followed by n copies of kNegInf; cyclic violations of the result <=>
/// plain violations of a.
inline CostSeq plain_to_mod_padding(std::span<const Cost> a) {
  if (a.empty()) throw InvalidInput("plain_to_mod_padding: empty sequence");
  CostSeq b(a.begin(), a.end());
  b.resize(2 * a.size(), kNegInf);
  return b;
}

}  // namespace frob::minconv
