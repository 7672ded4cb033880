#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>
#include <string>

namespace semik {

// Exact arithmetic everywhere; Smith reduction blows up intermediate
// entries well past 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// g = gcd(a,b) >= 0 with x*a + y*b = g.
struct ExtGcd {
  Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int xt = x0 - q * x1, yt = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = xt;
    y1 = yt;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

// Representative of a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Representative of q mod (m*Z) in [0, m) for rational q and positive
// rational modulus m.
inline Rat rat_mod(const Rat& q, const Rat& m) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  Rat t = q / m;
  Int fl = numerator(t) >= 0 ? numerator(t) / denominator(t)
                             : -((-numerator(t) + denominator(t) - 1) / denominator(t));
  return q - Rat(fl) * m;
}

inline bool rat_is_integer(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// base^e for e in Z (negative exponents give rationals).
inline Rat pow_rat(const Int& base, long e) {
  if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
  return Rat(1) / Rat(pow_int(base, static_cast<unsigned long>(-e)));
}

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& a) { return a.str(); }

}  // namespace semik
