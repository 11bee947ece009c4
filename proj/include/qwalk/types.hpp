#pragma once

#include <complex>
#include <numbers>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

/// Coin-space amplitudes at one lattice site or one momentum:
/// a multiplies |L>, b multiplies |R>.
struct Spinor {
  Complex a{};
  Complex b{};

  double norm2() const { return std::norm(a) + std::norm(b); }

  Spinor &operator+=(const Spinor &o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend Spinor operator+(Spinor l, const Spinor &r) { return l += r; }
  friend Spinor operator*(Complex s, const Spinor &p) { return {s * p.a, s * p.b}; }
  friend bool operator==(const Spinor &, const Spinor &) = default;
};

enum class Parity { even, odd };

inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline const char *to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

} // namespace qwalk
