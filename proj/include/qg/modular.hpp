#pragma once

// Exact arithmetic in Z_n. All values are kept in [0, n).

#include <cstdint>
#include <numeric>
#include <optional>

namespace qg {

  using Int = std::int64_t;

  // Least non-negative residue of x mod n (n >= 1).
  constexpr Int mod(Int x, Int n) noexcept {
    Int r = x % n;
    return r < 0 ? r + n : r;
  }

  constexpr Int mul_mod(Int x, Int y, Int n) noexcept {
    return mod(mod(x, n) * mod(y, n), n);
  }

  constexpr Int pow_mod(Int base, std::uint64_t exp, Int n) noexcept {
    Int result = mod(1, n);
    base       = mod(base, n);
    while (exp > 0) {
      if (exp & 1U) {
        result = mul_mod(result, base, n);
      }
      base = mul_mod(base, base, n);
      exp >>= 1U;
    }
    return result;
  }

  struct ExtendedGcd {
    Int g;
    Int x;
    Int y;
  };

  // g = gcd(a, b) = a*x + b*y.
  constexpr ExtendedGcd extended_gcd(Int a, Int b) noexcept {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
      Int q   = old_r / r;
      Int tmp = old_r - q * r;
      old_r   = r;
      r       = tmp;
      tmp     = old_s - q * s;
      old_s   = s;
      s       = tmp;
      tmp     = old_t - q * t;
      old_t   = t;
      t       = tmp;
    }
    if (old_r < 0) {
      return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
  }

  constexpr bool is_unit(Int x, Int n) noexcept {
    return std::gcd(mod(x, n), n) == 1;
  }

  // x^(-1) mod n, or nullopt when gcd(x, n) != 1.
  constexpr std::optional<Int> inverse_mod(Int x, Int n) noexcept {
    auto [g, s, t] = extended_gcd(mod(x, n), n);
    (void) t;
    if (g != 1) {
      return std::nullopt;
    }
    return mod(s, n);
  }

}  // namespace qg
