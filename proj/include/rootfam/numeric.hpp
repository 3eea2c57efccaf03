/**
 * @file numeric.hpp
 * @brief Arbitrary-precision real and complex arithmetic on top of MPFR.
 *
 * `Real` owns an mpfr_t. `Scalar` is a complex number made of two Reals bound
 * to an `EvalContext` (working precision plus guard bits used internally by
 * the elementary functions). Every operation checks its result: NaN raises
 * DomainError, infinity raises Overflow.
 */
#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "rootfam/error.hpp"

namespace rootfam {

class Real {
 public:
  explicit Real(long precision_bits = 64);
  Real(long value, long precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Correctly rounded parse of a decimal literal ("1.5", "-2e-40").
  static Real parse(std::string_view text, long precision_bits);
  static Real from_double(double value, long precision_bits);
  static Real pi(long precision_bits);
  /// 2^exponent, exact.
  static Real pow2(long exponent, long precision_bits);

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy rounded (or extended exactly) to `precision_bits`.
  Real with_precision(long precision_bits) const;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const noexcept { return static_cast<long>(mpfr_get_exp(value_)); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }

  /// Enough decimal digits to read back to the same value ("d.ddd…e±h").
  std::string to_exact_string() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, long exponent);
Real max(const Real& a, const Real& b);

/// Working precision plus the guard bits used inside elementary functions.
struct EvalContext {
  long precision_bits = 512;
  long guard_bits = 32;

  static constexpr long kMinPrecision = 64;
  static constexpr long kLibraryDefault = 512;
  static constexpr long kBenchmarkDefault = 4096;

  /// Throws ValidationError when precision_bits < 64 or guard_bits < 0.
  static EvalContext make(long precision_bits, long guard_bits = 32);
  long working_bits() const noexcept { return precision_bits + guard_bits; }

  friend bool operator==(const EvalContext&, const EvalContext&) = default;
};

class Scalar {
 public:
  explicit Scalar(const EvalContext& ctx);
  Scalar(const EvalContext& ctx, long re, long im = 0);
  /// Components are rounded to the context precision.
  Scalar(const EvalContext& ctx, const Real& re, const Real& im);
  Scalar(const EvalContext& ctx, const Real& re);

  /// Parses "a", "ai", "a+bi", "a-bi", "i", "-i" with decimal/scientific parts.
  static Scalar parse(const EvalContext& ctx, std::string_view text);
  static Scalar pi(const EvalContext& ctx);
  static Scalar imaginary_unit(const EvalContext& ctx);

  const EvalContext& context() const noexcept { return ctx_; }
  long precision() const noexcept { return ctx_.precision_bits; }
  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  /// Same value carried at another precision.
  Scalar rebind(const EvalContext& ctx) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Multiplication by an integer, exact up to final rounding.
  Scalar scaled(long factor) const;

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
  EvalContext ctx_;
};

enum class ArithOp { Add, Sub, Mul, Div };
enum class ElemFn { Exp, Sin, Cos, Sqrt, Log, Neg, Abs };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar scalar_elem(const Scalar& x, ElemFn fn);

Scalar exp(const Scalar& x);
Scalar sin(const Scalar& x);
Scalar cos(const Scalar& x);
/// Principal branch; sqrt(0) = 0.
Scalar sqrt(const Scalar& x);
/// Principal branch; DomainError at 0.
Scalar log(const Scalar& x);
/// Modulus as a real-valued Scalar, computed without intermediate overflow.
Scalar abs(const Scalar& x);
/// Modulus as a Real at the Scalar's precision.
Real modulus(const Scalar& x);
/// Integer power by repeated squaring; negative exponents invert.
Scalar pow(const Scalar& base, long exponent);

/// Round-to-nearest rendering "m.mm…e±h" with `sig_digits` significant digits;
/// real values omit the imaginary part, otherwise "re+imi" / "re-imi".
std::string to_decimal_string(const Scalar& x, int sig_digits);
std::string to_decimal_string(const Real& x, int sig_digits);
/// Enough digits per component for an exact read-back through Scalar::parse.
std::string to_exact_string(const Scalar& x);

/// |a - b| measured in units in the last place of max(|a|, |b|) at the
/// precision of `a`. Zero when both are zero.
double ulp_distance(const Scalar& a, const Scalar& b);
double ulp_distance(const Real& a, const Real& b);

}  // namespace rootfam
