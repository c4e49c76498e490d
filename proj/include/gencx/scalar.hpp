#pragma once

// Scalar fields used throughout: exact rationals, doubles, and complex pairs
// over either. Exactness is a property of the type, never of a value.

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

#include "gencx/error.hpp"

namespace gencx {

// Expression templates off: generic code stores intermediate results in `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// ---------------------------------------------------------------------------
// Tolerance for float mode. Exact mode ignores it.

namespace detail {
inline std::atomic<double>& tolerance_slot() {
  static std::atomic<double> eps{1e-9};
  return eps;
}
}  // namespace detail

inline double tolerance() { return detail::tolerance_slot().load(std::memory_order_relaxed); }

inline void set_tolerance(double eps) {
  if (!(eps > 0.0)) throw ParameterError("tolerance must be positive");
  detail::tolerance_slot().store(eps, std::memory_order_relaxed);
}

/// Overrides the float tolerance for the lifetime of the guard.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(double eps) : saved_(tolerance()) { set_tolerance(eps); }
  ~ScopedTolerance() { detail::tolerance_slot().store(saved_); }
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  double saved_;
};

// ---------------------------------------------------------------------------
// Complex numbers as (re, im) pairs over a real field.

template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  template <std::integral I>
  Complex(I r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return {T(0), T(1)}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T den = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / den;
    T i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << "," << z.im << ")";
  }
};

template <class T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, -z.im};
}

// ---------------------------------------------------------------------------
// Field traits.

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<Complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T>
concept RealField = std::same_as<T, Rational> || std::same_as<T, double>;

template <class F>
struct real_of {
  using type = F;
};
template <class T>
struct real_of<Complex<T>> {
  using type = T;
};
template <class F>
using real_of_t = typename real_of<F>::type;

template <class F>
inline constexpr bool is_exact_v = std::same_as<real_of_t<F>, Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double d) { return std::abs(d) <= tolerance(); }
template <class T>
bool is_zero(const Complex<T>& z) {
  if constexpr (std::same_as<T, Rational>) {
    return z.re.is_zero() && z.im.is_zero();
  } else {
    return std::hypot(z.re, z.im) <= tolerance();
  }
}

/// Magnitude used for pivot selection and residual norms.
inline double magnitude(const Rational& r) { return std::abs(to_double(r)); }
inline double magnitude(double d) { return std::abs(d); }
template <class T>
double magnitude(const Complex<T>& z) {
  return std::hypot(to_double(z.re), to_double(z.im));
}

inline const Rational& conj(const Rational& r) { return r; }
inline double conj(double d) { return d; }

/// Exact square root of a non-negative rational, if it is rational.
inline std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer sn = boost::multiprecision::sqrt(num);
  Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

/// Square root in the given field; throws ExactnessError when the exact root is irrational.
inline Rational sqrt_field(const Rational& r) {
  auto s = sqrt_exact(r);
  if (!s) throw ExactnessError("square root of " + r.str() + " is irrational; use float mode");
  return *s;
}
inline double sqrt_field(double d) { return std::sqrt(d); }

template <RealField T>
T from_double(double d);
template <>
inline double from_double<double>(double d) {
  return d;
}
template <>
inline Rational from_double<Rational>(double d) {
  return Rational(d);
}

template <RealField T>
T convert(const Rational& r) {
  if constexpr (std::same_as<T, Rational>) {
    return r;
  } else {
    return to_double(r);
  }
}
template <RealField T>
T convert(double d) {
  return from_double<T>(d);
}
template <RealField T, RealField S>
Complex<T> convert(const Complex<S>& z) {
  return {convert<T>(z.re), convert<T>(z.im)};
}

/// Parses "p/q", an integer, or a finite decimal ("0.6", "-1.25") exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return Integer(t);
  };
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational literal '" + s + "'");
      Integer d = to_int(den);
      if (d == 0) throw ParseError("zero denominator in '" + s + "'");
      return Rational(to_int(num), d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      if (!valid_int(whole) || (!frac.empty() && !valid_int(frac)) || (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
        throw ParseError("bad decimal literal '" + s + "'");
      Integer scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Integer w = to_int(whole);
      Integer f = frac.empty() ? Integer(0) : Integer(frac);
      Rational r(w);
      Rational fr(f, scale);
      return neg ? r - fr : r + fr;
    }
    if (!valid_int(s)) throw ParseError("bad rational literal '" + s + "'");
    return Rational(to_int(s));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}
}  // namespace gencx
