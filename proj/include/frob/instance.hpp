#pragma once

// Problem-instance model for the unbounded knapsack equation
//   a_0 x_0 + ... + a_n x_n = t,  x >= 0.
// Items are kept sorted, distinct and positive; gcd 1 is enforced wherever
// Frobenius numbers or residue tables are involved.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frob {

using Value = std::int64_t;

/// Largest admissible item size. Keeps sums of a handful of items and
/// products like a_0 * a_n within 64-bit signed range for the table engines.
inline constexpr Value kMaxItem = Value{1} << 40;

/// Raised for malformed or out-of-contract user input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Value gcd_of(std::span<const Value> xs) {
  Value g = 0;
  for (Value x : xs) g = std::gcd(g, x);
  return g;
}

inline std::vector<Value> sorted_unique(std::vector<Value> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline void check_item_range(std::span<const Value> xs) {
  if (xs.empty()) throw InvalidInput("empty item list");
  for (Value x : xs) {
    if (x <= 0) throw InvalidInput("item sizes must be positive, got " + std::to_string(x));
    if (x > kMaxItem) throw InvalidInput("item size " + std::to_string(x) + " exceeds 2^40");
  }
}

// floor(log2(x)) for x >= 1
inline int floor_log2(std::uint64_t x) { return 63 - __builtin_clzll(x); }

}  // namespace detail

/// Sorted, distinct, positive item sizes with gcd 1.
class Instance {
 public:
  /// Validates and normalizes (sort + dedup). Throws InvalidInput on an empty
  /// list, a non-positive or oversized item, or gcd != 1.
  explicit Instance(std::vector<Value> items) : items_(detail::sorted_unique(std::move(items))) {
    detail::check_item_range(items_);
    const Value g = detail::gcd_of(items_);
    if (g != 1) throw InvalidInput("gcd of items is " + std::to_string(g) + ", expected 1");
  }

  std::span<const Value> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  /// Index of the largest item, i.e. the n in a_0..a_n.
  std::size_t n() const { return items_.size() - 1; }
  Value smallest() const { return items_.front(); }
  Value largest() const { return items_.back(); }
  Value operator[](std::size_t i) const { return items_[i]; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Value> items_;
};

/// Minimal feasible target per residue class modulo a_0.
struct ResidueTable {
  Value modulus = 1;
  std::vector<Value> entries{0};

  /// Frobenius number read off the table: max entry minus a_0, or -1 when
  /// a_0 = 1.
  Value frobenius() const {
    if (modulus == 1) return -1;
    return *std::max_element(entries.begin(), entries.end()) - modulus;
  }

  friend bool operator==(const ResidueTable&, const ResidueTable&) = default;
};

/// Multiplicity vector x with sum x_i a_i = target.
struct Solution {
  std::vector<Value> multiplicities;

  Value weighted_sum(const Instance& inst) const {
    Value s = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) s += multiplicities[i] * inst[i];
    return s;
  }
  std::size_t support() const {
    return static_cast<std::size_t>(std::count_if(multiplicities.begin(), multiplicities.end(),
                                                  [](Value x) { return x != 0; }));
  }

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Parses whitespace separated positive integers without the gcd check.
/// Result is sorted and deduplicated.
inline std::vector<Value> parse_items(std::string_view text) {
  std::vector<Value> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw InvalidInput("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  detail::check_item_range(out);
  return detail::sorted_unique(std::move(out));
}

inline Instance parse_instance(std::string_view text) { return Instance(parse_items(text)); }

inline std::string serialize(const Instance& inst) {
  std::string s;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(inst[i]);
  }
  return s;
}

/// Outcome of dividing items (and optionally a target) by their gcd.
struct GcdNormalized {
  std::optional<Instance> instance;  // empty iff infeasible_by_gcd
  Value divisor = 1;
  std::optional<Value> target;
  bool infeasible_by_gcd = false;
};

inline GcdNormalized normalize_gcd(std::vector<Value> items, std::optional<Value> t = std::nullopt) {
  detail::check_item_range(items);
  const Value g = detail::gcd_of(items);
  GcdNormalized out;
  out.divisor = g;
  if (t && *t % g != 0) {
    out.infeasible_by_gcd = true;
    return out;
  }
  for (Value& x : items) x /= g;
  out.instance.emplace(std::move(items));
  if (t) out.target = *t / g;
  return out;
}

/// floor(2 a_{n-1} a_n / (n+1)) - a_n, an upper bound on the Frobenius number.
/// Returns -1 when a_0 = 1 (every target is feasible, so F = -1 already) or
/// when there is a single item.
inline Value erdos_graham_bound(const Instance& inst) {
  if (inst.size() < 2 || inst.smallest() == 1) return -1;
  const auto n = static_cast<__int128>(inst.n());
  const __int128 prod = static_cast<__int128>(inst[inst.n() - 1]) * inst.largest() * 2;
  const __int128 bound = prod / (n + 1) - inst.largest();
  if (bound > std::numeric_limits<Value>::max()) throw InvalidInput("Erdos-Graham bound overflows 64 bits");
  return static_cast<Value>(bound);
}

/// smallest r >= 0 with 2^(2^r) >= x, i.e. ceil(log2 log2 x) for x >= 2.
inline int ceil_log2_log2(Value x) {
  for (int r = 0;; ++r) {
    const int e = 1 << r;
    if (e >= 63 || (Value{1} << e) >= x) return r;
  }
}

/// n+1 distinct items drawn from [1, a_max], gcd 1, deterministic per seed.
inline Instance random_instance(std::size_t n, Value a_max, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_instance needs n >= 1");
  if (a_max < 2) throw InvalidInput("random_instance needs a_max >= 2");
  if (static_cast<Value>(n + 1) > a_max)
    throw InvalidInput("cannot draw " + std::to_string(n + 1) + " distinct items from [1, " + std::to_string(a_max) + "]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(1, a_max);
  std::vector<Value> items;
  for (int attempt = 0;; ++attempt) {
    items.clear();
    while (items.size() < n + 1) {
      const Value v = dist(rng);
      if (std::find(items.begin(), items.end(), v) == items.end()) items.push_back(v);
    }
    if (detail::gcd_of(items) == 1) break;
    if (attempt >= 64) {
      // force coprimality: replace one item by a value coprime to the rest
      std::sort(items.begin(), items.end());
      const Value g = detail::gcd_of(std::span<const Value>(items).first(items.size() - 1));
      Value v = a_max;
      while (std::gcd(v, g) != 1 || std::find(items.begin(), items.end() - 1, v) != items.end() - 1) --v;
      items.back() = v;
      break;
    }
  }
  return Instance(std::move(items));
}

/// Like random_instance, but the largest item is exactly a_n and the other n
/// items come from [2, a_n - 1].
inline Instance random_instance_pinned(std::size_t n, Value a_n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_instance_pinned needs n >= 1");
  if (static_cast<Value>(n) > a_n - 2) throw InvalidInput("a_n too small for the requested item count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(2, a_n - 1);
  std::vector<Value> items;
  do {
    items.assign(1, a_n);
    while (items.size() < n + 1) {
      const Value v = dist(rng);
      if (std::find(items.begin(), items.end(), v) == items.end()) items.push_back(v);
    }
  } while (detail::gcd_of(items) != 1);
  return Instance(std::move(items));
}

}  // namespace frob
