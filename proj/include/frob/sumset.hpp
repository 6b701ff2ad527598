#pragma once

// Feasibility sets over the intervals I(j) = ((j-1) a_n, j a_n] and the
// algorithms that grow them by sumsets: subset-sum decision by doubling,
// Frobenius number by doubling plus a bit-by-bit binary search, and residue
// tables by walking consecutive intervals. round_robin is the O(n a_0)
// residue-table baseline used for small n.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "frob/instance.hpp"
#include "frob/ntt.hpp"

namespace frob::sumset {

/// Feasible targets inside I(index) = ((index-1) w, index w], w = a_n.
/// bits[r] <=> target (index-1) w + r + 1 is feasible.
class FeasibilitySet {
 public:
  FeasibilitySet(Value index, std::vector<std::uint8_t> bits)
      : index_(index), bits_(std::move(bits)),
        count_(static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}))) {
    if (index_ < 1) throw std::invalid_argument("FeasibilitySet index must be >= 1");
  }

  Value index() const { return index_; }
  Value width() const { return static_cast<Value>(bits_.size()); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t count() const { return count_; }
  bool full() const { return count_ == bits_.size(); }

  /// Exclusive lower / inclusive upper end of the interval.
  Value lower() const { return (index_ - 1) * width(); }
  Value upper() const { return index_ * width(); }

  bool contains(Value t) const {
    if (t <= lower() || t > upper()) return false;
    return bits_[static_cast<std::size_t>(t - lower() - 1)] != 0;
  }

  /// Largest infeasible target in the interval, if any.
  std::optional<Value> max_missing() const {
    for (std::size_t r = bits_.size(); r-- > 0;)
      if (!bits_[r]) return lower() + static_cast<Value>(r) + 1;
    return std::nullopt;
  }

  friend bool operator==(const FeasibilitySet&, const FeasibilitySet&) = default;

 private:
  Value index_;
  std::vector<std::uint8_t> bits_;
  std::size_t count_;
};

/// Per-run counters.
struct Stats {
  std::size_t advance_calls = 0;
};

/// A(1) by the unbounded-knapsack sieve over 0..a_n.
inline FeasibilitySet base_interval(const Instance& inst) {
  const Value w = inst.largest();
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(w) + 1, 0);
  reach[0] = 1;
  for (Value a : inst.items())
    for (Value v = a; v <= w; ++v) reach[v] |= reach[v - a];
  return FeasibilitySet(1, std::vector<std::uint8_t>(reach.begin() + 1, reach.end()));
}

/// Computes A(i+j) from A(i), A(j) as (A(i) + A(j) + T) restricted to I(i+j),
/// where T = S u {0} by default, or T = S when `with_zero` is false.
///
/// Offsets: a in A(i) is (i-1)w + r1 + 1 and b in A(j) is (j-1)w + r2 + 1, so
/// a + b + s lands at offset r1 + r2 + s + 1 - w of I(i+j).
class IntervalAdder {
 public:
  explicit IntervalAdder(const Instance& inst, bool with_zero = true)
      : width_(static_cast<std::size_t>(inst.largest())),
        shifts_(width_ + 1, 0) {
    for (Value a : inst.items()) shifts_[static_cast<std::size_t>(a)] = 1;
    if (with_zero) shifts_[0] = 1;
    shift_count_ = static_cast<std::size_t>(std::count(shifts_.begin(), shifts_.end(), std::uint8_t{1}));
    if (width_ > ntt::kDirectThreshold) {
      // cyclic length must cover the full triple sum, 3w - 1 coefficients
      const std::size_t len = 3 * width_ - 1;
      if (ntt::fits_mod998(len))
        engine_.emplace<Spectral<ntt::Mod998>>(len, shifts_);
      else
        engine_.emplace<Spectral<ntt::Goldilocks>>(len, shifts_);
    }
  }

  std::size_t width() const { return width_; }

  FeasibilitySet operator()(const FeasibilitySet& ai, const FeasibilitySet& aj, Stats* stats = nullptr) const {
    if (static_cast<std::size_t>(ai.width()) != width_ || static_cast<std::size_t>(aj.width()) != width_)
      throw std::invalid_argument("advance: feasibility sets of a different instance");
    const Value w = static_cast<Value>(width_);
    if (ai.index() > std::numeric_limits<Value>::max() / w - aj.index())
      throw std::overflow_error("advance: interval index overflows 64 bits");
    if (stats) ++stats->advance_calls;

    std::vector<std::uint8_t> sum;
    if (std::holds_alternative<std::monostate>(engine_)) {
      const auto pair = ntt::boolean_convolve(ai.bits(), aj.bits());
      sum = ntt::boolean_convolve(pair, shifts_);
    } else {
      sum = std::visit(
          [&](const auto& eng) -> std::vector<std::uint8_t> {
            if constexpr (std::is_same_v<std::decay_t<decltype(eng)>, std::monostate>) {
              return {};
            } else {
              return eng.triple(ai.bits(), aj.bits(), &ai == &aj, shift_count_);
            }
          },
          engine_);
    }
    // offset r of I(i+j) sits at index r + w - 1 of the triple sum
    std::vector<std::uint8_t> out(width_, 0);
    for (std::size_t r = 0; r < width_; ++r) {
      const std::size_t k = r + width_ - 1;
      out[r] = k < sum.size() ? sum[k] : 0;
    }
    return FeasibilitySet(ai.index() + aj.index(), std::move(out));
  }

 private:
  template <typename F>
  class Spectral {
   public:
    Spectral(std::size_t len, std::span<const std::uint8_t> shifts)
        : len_(len), spec_(ntt::ceil_pow2(len)), shift_spec_(spec_.forward(shifts)) {}

    std::vector<std::uint8_t> triple(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y, bool same,
                                     std::size_t shift_count) const {
      auto fx = spec_.forward(x);
      // coefficients of x*y*shifts are at most |x| * |shifts|; fold all three
      // spectra at once when that stays below p, otherwise clamp in between
      const bool one_pass = static_cast<unsigned __int128>(x.size()) * shift_count < F::kMod;
      if (same) {
        auto sq = fx;
        ntt::BoolSpectrum<F>::multiply_into(fx, sq);
      } else {
        ntt::BoolSpectrum<F>::multiply_into(fx, spec_.forward(y));
      }
      if (!one_pass) {
        const auto pair = spec_.inverse(std::move(fx), x.size() + y.size() - 1);
        fx = spec_.forward(pair);
      }
      ntt::BoolSpectrum<F>::multiply_into(fx, shift_spec_);
      return spec_.inverse(std::move(fx), len_);
    }

   private:
    std::size_t len_;
    ntt::BoolSpectrum<F> spec_;
    std::vector<typename F::word> shift_spec_;
  };

  std::size_t width_;
  std::vector<std::uint8_t> shifts_;
  std::size_t shift_count_ = 0;
  std::variant<std::monostate, Spectral<ntt::Mod998>, Spectral<ntt::Goldilocks>> engine_;
};

inline FeasibilitySet advance(const FeasibilitySet& ai, const FeasibilitySet& aj, const Instance& inst) {
  return IntervalAdder(inst)(ai, aj);
}

/// Decides feasibility of t by doubling A(1), A(2), A(4), ... and folding the
/// binary digits of k = ceil(t / a_n), lowest set bit first.
inline bool uss_decide(const Instance& inst, Value t, Stats* stats = nullptr) {
  if (t < 0) throw InvalidInput("target must be non-negative");
  if (t == 0 || inst.smallest() == 1) return true;
  const Value w = inst.largest();
  const Value k = t / w + (t % w != 0);
  const IntervalAdder adder(inst);

  std::vector<FeasibilitySet> powers{base_interval(inst)};
  // powers[i] = A(2^i); stop at the first full set or once 2^i >= k
  while (!powers.back().full() && (Value{1} << (powers.size() - 1)) < k)
    powers.push_back(adder(powers.back(), powers.back(), stats));
  const Value top = Value{1} << (powers.size() - 1);
  if (powers.back().full() && top <= k) return true;
  if (top == k) return powers.back().contains(t);

  // k < top here, so every set bit of k has a precomputed power
  int bit = __builtin_ctzll(static_cast<std::uint64_t>(k));
  FeasibilitySet cur = powers[static_cast<std::size_t>(bit)];
  for (++bit; (Value{1} << bit) <= k; ++bit) {
    if (cur.full()) return true;
    if (!((k >> bit) & 1)) continue;
    cur = adder(cur, powers[static_cast<std::size_t>(bit)], stats);
  }
  return cur.full() || cur.contains(t);
}

/// Largest index f whose set is not full, given powers[i] = A(2^i) with only
/// the last one full. Performs exactly R - 1 advance calls for R = powers.size() - 1.
inline std::pair<Value, FeasibilitySet> efficient_binary_search(std::span<const FeasibilitySet> powers,
                                                                const Instance& inst, Stats* stats = nullptr,
                                                                const IntervalAdder* adder = nullptr) {
  if (powers.size() < 2 || !powers.back().full() || powers[powers.size() - 2].full())
    throw std::invalid_argument("efficient_binary_search: need A(2^R) full and A(2^(R-1)) not full");
  std::optional<IntervalAdder> local;
  if (!adder) adder = &local.emplace(inst);
  const std::size_t r = powers.size() - 1;
  Value left = Value{1} << (r - 1);
  FeasibilitySet at_left = powers[r - 1];
  for (std::size_t i = r - 1; i-- > 0;) {
    FeasibilitySet mid = (*adder)(at_left, powers[i], stats);
    if (!mid.full()) {
      left += Value{1} << i;
      at_left = std::move(mid);
    }
  }
  return {left, std::move(at_left)};
}

struct FrobeniusResult {
  Value value = -1;
  Value last_partial_index = 0;  // f, 0 when a_0 = 1
  std::size_t doublings = 0;     // R
  Stats stats;
};

inline FrobeniusResult frobenius_detailed(const Instance& inst) {
  FrobeniusResult res;
  if (inst.smallest() == 1) return res;
  const IntervalAdder adder(inst);
  std::vector<FeasibilitySet> powers{base_interval(inst)};
  while (!powers.back().full()) powers.push_back(adder(powers.back(), powers.back(), &res.stats));
  res.doublings = powers.size() - 1;
  auto [f, af] = efficient_binary_search(powers, inst, &res.stats, &adder);
  res.last_partial_index = f;
  res.value = *af.max_missing();
  return res;
}

inline Value frobenius(const Instance& inst) { return frobenius_detailed(inst).value; }

/// Residue table by the cycle-wise round-robin relaxation, O(n a_0).
inline ResidueTable round_robin(const Instance& inst) {
  const Value a0 = inst.smallest();
  if (a0 == 1) return ResidueTable{};
  if (static_cast<__int128>(a0) * inst.largest() >= (__int128{1} << 62))
    throw InvalidInput("a_0 * a_n too large for 64-bit residue tables");
  constexpr Value kUnset = std::numeric_limits<Value>::max();
  std::vector<Value> e(static_cast<std::size_t>(a0), kUnset);
  e[0] = 0;
  for (std::size_t i = 1; i < inst.size(); ++i) {
    const Value a = inst[i];
    const Value step = a % a0;
    const Value d = std::gcd(a, a0);
    const Value cycle_len = a0 / d;
    for (Value p = 0; p < d; ++p) {
      // start from the cycle minimum so one lap suffices
      Value start = p;
      Value best = e[p];
      for (Value r = (p + step) % a0, c = 1; c < cycle_len; ++c, r = (r + step) % a0)
        if (e[r] < best) {
          best = e[r];
          start = r;
        }
      if (best == kUnset) continue;
      Value r = start;
      for (Value c = 1; c < cycle_len; ++c) {
        const Value nr = (r + step) % a0;
        best = std::min(best + a, e[nr]);
        e[nr] = best;
        r = nr;
      }
    }
  }
  for (Value v : e)
    if (v == kUnset) throw std::logic_error("round_robin: residue class left unreachable");
  return ResidueTable{a0, std::move(e)};
}

/// Residue table by walking A(1), A(2), ... with A(i+1) = advance(A(i), A(1)),
/// recording the first hit per residue, until an interval is full.
inline ResidueTable alltargets_interval_walk(const Instance& inst, Stats* stats = nullptr) {
  const Value a0 = inst.smallest();
  if (a0 == 1) return ResidueTable{};
  const IntervalAdder adder(inst);
  std::vector<Value> e(static_cast<std::size_t>(a0), -1);
  e[0] = 0;
  Value missing = a0 - 1;
  const FeasibilitySet first = base_interval(inst);
  FeasibilitySet cur = first;
  for (;;) {
    const auto bits = cur.bits();
    for (std::size_t r = 0; r < bits.size() && missing > 0; ++r) {
      if (!bits[r]) continue;
      const Value t = cur.lower() + static_cast<Value>(r) + 1;
      Value& slot = e[static_cast<std::size_t>(t % a0)];
      if (slot < 0) {
        slot = t;
        --missing;
      }
    }
    if (cur.full() || missing == 0) break;
    cur = adder(cur, first, stats);
  }
  if (missing != 0) throw std::logic_error("interval walk ended with unreached residues");
  return ResidueTable{a0, std::move(e)};
}

/// Whether alltargets_sumset hands the instance to round_robin:
/// n + 1 < sqrt(a_n log2 a_n).
inline bool prefers_round_robin(const Instance& inst) {
  const double an = static_cast<double>(inst.largest());
  const double lg = an > 1 ? std::log2(an) : 0.0;
  return static_cast<double>(inst.size()) < std::sqrt(an * lg);
}

inline ResidueTable alltargets_sumset(const Instance& inst, Stats* stats = nullptr) {
  if (prefers_round_robin(inst)) return round_robin(inst);
  return alltargets_interval_walk(inst, stats);
}

}  // namespace frob::sumset
