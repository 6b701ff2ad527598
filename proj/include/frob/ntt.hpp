#pragma once

// Number-theoretic transform over two word-size primes and the 0/1
// ("boolean") convolution built on it.
//
//   Mod998     p = 119 * 2^23 + 1, Montgomery form in 32 bits, lengths <= 2^23
//   Goldilocks p = 2^64 - 2^32 + 1, lengths <= 2^32
//
// A 0/1 convolution has coefficients bounded by the shorter input length, so
// for inputs shorter than p no coefficient can vanish mod p.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace frob::ntt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// p^{-1} mod 2^32 for odd p, by Newton iteration.
constexpr u32 inv_mod_2_32(u32 p) {
  u32 inv = p;
  for (int i = 0; i < 4; ++i) inv *= 2u - p * inv;
  return inv;
}

/// Montgomery arithmetic mod 998244353. Elements are stored as x * 2^32 mod p.
struct Mod998 {
  using word = u32;
  static constexpr u32 kMod = 998244353u;
  static constexpr u32 kRoot = 3u;
  static constexpr int kTwoAdicity = 23;

  static constexpr u32 kNegInv = 0u - inv_mod_2_32(kMod);  // -p^{-1} mod 2^32
  static constexpr u32 kR2 = static_cast<u32>((u128{1} << 64) % kMod);

  static constexpr u32 reduce(u64 x) {
    const u32 m = static_cast<u32>(x) * kNegInv;
    const u32 t = static_cast<u32>((x + static_cast<u64>(m) * kMod) >> 32);
    return t >= kMod ? t - kMod : t;
  }
  static constexpr u32 mul(u32 a, u32 b) { return reduce(static_cast<u64>(a) * b); }
  static constexpr u32 add(u32 a, u32 b) {
    const u32 s = a + b;
    return s >= kMod ? s - kMod : s;
  }
  static constexpr u32 sub(u32 a, u32 b) { return a >= b ? a - b : a + kMod - b; }
  static constexpr u32 from(u64 x) { return mul(static_cast<u32>(x % kMod), kR2); }
  static constexpr u64 to(u32 a) { return reduce(a); }
  static constexpr u32 one() { return from(1); }
  static constexpr u32 zero() { return 0; }
};

/// Arithmetic mod 2^64 - 2^32 + 1 with the usual 2^64 = 2^32 - 1 folding.
struct Goldilocks {
  using word = u64;
  static constexpr u64 kMod = 0xFFFFFFFF00000001ull;
  static constexpr u64 kRoot = 7u;
  static constexpr int kTwoAdicity = 32;
  static constexpr u64 kEps = 0xFFFFFFFFull;

  static constexpr u64 reduce128(u128 x) {
    const u64 lo = static_cast<u64>(x);
    const u64 hi = static_cast<u64>(x >> 64);
    const u64 hi_hi = hi >> 32;
    const u64 hi_lo = hi & kEps;
    u64 t0 = lo - hi_hi;
    if (lo < hi_hi) t0 -= kEps;
    const u64 t1 = hi_lo * kEps;
    u64 r = t0 + t1;
    if (r < t1) r += kEps;
    return r >= kMod ? r - kMod : r;
  }
  static constexpr u64 mul(u64 a, u64 b) { return reduce128(static_cast<u128>(a) * b); }
  static constexpr u64 add(u64 a, u64 b) {
    const u64 s = a + b;
    if (s < a) return s + kEps;  // wrapped past 2^64
    return s >= kMod ? s - kMod : s;
  }
  static constexpr u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + (kMod - b); }
  static constexpr u64 from(u64 x) { return x >= kMod ? x - kMod : x; }
  static constexpr u64 to(u64 a) { return a; }
  static constexpr u64 one() { return 1; }
  static constexpr u64 zero() { return 0; }
};

template <typename F>
constexpr typename F::word power(typename F::word base, u64 e) {
  typename F::word r = F::one();
  while (e) {
    if (e & 1) r = F::mul(r, base);
    base = F::mul(base, base);
    e >>= 1;
  }
  return r;
}

/// In-place iterative radix-2 transform of length 2^k (k <= F::kTwoAdicity).
template <typename F>
void transform(std::vector<typename F::word>& a, bool inverse) {
  using W = typename F::word;
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<W> tw(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    W w = power<F>(F::from(F::kRoot), (F::kMod - 1) / len);
    if (inverse) w = power<F>(w, F::kMod - 2);
    const std::size_t half = len / 2;
    tw[0] = F::one();
    for (std::size_t k = 1; k < half; ++k) tw[k] = F::mul(tw[k - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      W* lo = a.data() + i;
      W* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const W v = F::mul(hi[k], tw[k]);
        hi[k] = F::sub(lo[k], v);
        lo[k] = F::add(lo[k], v);
      }
    }
  }
  if (inverse) {
    const W inv_n = power<F>(F::from(n), F::kMod - 2);
    for (W& x : a) x = F::mul(x, inv_n);
  }
}

inline std::size_t ceil_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

inline int log2_exact(std::size_t n) { return 63 - __builtin_clzll(n); }

/// Transforms of 0/1 vectors at a fixed power-of-two size, with the product
/// of several spectra mapped back to a clamped 0/1 vector.
template <typename F>
class BoolSpectrum {
 public:
  using W = typename F::word;

  explicit BoolSpectrum(std::size_t size) : size_(size) {
    if (log2_exact(size) > F::kTwoAdicity) throw std::length_error("NTT length exceeds the field's 2-adicity");
  }

  std::size_t size() const { return size_; }

  std::vector<W> forward(std::span<const std::uint8_t> bits) const {
    std::vector<W> a(size_, F::zero());
    const W one = F::one();
    for (std::size_t i = 0; i < bits.size() && i < size_; ++i)
      if (bits[i]) a[i] = one;
    transform<F>(a, false);
    return a;
  }

  static void multiply_into(std::vector<W>& acc, const std::vector<W>& other) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F::mul(acc[i], other[i]);
  }

  /// Inverse transform, clamped to {0,1}, first `len` coefficients.
  std::vector<std::uint8_t> inverse(std::vector<W> spec, std::size_t len) const {
    transform<F>(spec, true);
    std::vector<std::uint8_t> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = F::to(spec[i]) != 0;
    return out;
  }

 private:
  std::size_t size_;
};

/// Lengths at or below this use the direct shift-or kernel.
inline constexpr std::size_t kDirectThreshold = 1024;

/// out[k] = OR_{i+j=k} x[i] & y[j], by shifting y over each set bit of x.
inline std::vector<std::uint8_t> boolean_convolve_direct(std::span<const std::uint8_t> x,
                                                         std::span<const std::uint8_t> y) {
  if (x.empty() || y.empty()) return {};
  std::vector<std::uint8_t> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    std::uint8_t* dst = out.data() + i;
    for (std::size_t j = 0; j < y.size(); ++j) dst[j] |= y[j];
  }
  return out;
}

template <typename F>
std::vector<std::uint8_t> boolean_convolve_ntt(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.empty() || y.empty()) return {};
  const std::size_t len = x.size() + y.size() - 1;
  const BoolSpectrum<F> spec(ceil_pow2(len));
  auto fx = spec.forward(x);
  BoolSpectrum<F>::multiply_into(fx, spec.forward(y));
  return spec.inverse(std::move(fx), len);
}

/// Whether Mod998 can carry a 0/1 convolution of this output length.
inline bool fits_mod998(std::size_t out_len) {
  return ceil_pow2(out_len) <= (std::size_t{1} << Mod998::kTwoAdicity) && out_len < Mod998::kMod;
}

/// Boolean convolution; direct kernel for short inputs, NTT otherwise.
inline std::vector<std::uint8_t> boolean_convolve(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() <= kDirectThreshold && y.size() <= kDirectThreshold) return boolean_convolve_direct(x, y);
  const std::size_t len = x.size() + y.size() - 1;
  if (fits_mod998(len)) return boolean_convolve_ntt<Mod998>(x, y);
  return boolean_convolve_ntt<Goldilocks>(x, y);
}

}  // namespace frob::ntt
