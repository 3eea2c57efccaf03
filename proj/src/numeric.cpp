#include "rootfam/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

namespace rootfam {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

void check_finite(mpfr_srcptr v, const char* what) {
  if (mpfr_nan_p(v)) throw Error(ErrorCode::DomainError, std::string(what) + " produced NaN");
  if (mpfr_inf_p(v)) throw Error(ErrorCode::Overflow, std::string(what) + " exceeded the exponent range");
}

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

const EvalContext& wider(const EvalContext& a, const EvalContext& b) {
  return a.precision_bits >= b.precision_bits ? a : b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Real

Real::Real(long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, long precision_bits) {
  std::string s(text);
  auto allowed = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
           c == '+' || c == '-';
  };
  if (s.empty() || !std::all_of(s.begin(), s.end(), allowed)) {
    throw Error(ErrorCode::ValidationError, "malformed real literal '" + s + "'");
  }
  Real r(precision_bits);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRound);
  if (end != s.c_str() + s.size() || !mpfr_number_p(r.value_)) {
    throw Error(ErrorCode::ValidationError, "malformed real literal '" + s + "'");
  }
  return r;
}

Real Real::from_double(double value, long precision_bits) {
  Real r(precision_bits);
  mpfr_set_d(r.value_, value, kRound);
  check_finite(r.value_, "from_double");
  return r;
}

Real Real::pi(long precision_bits) {
  Real r(precision_bits);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

Real Real::pow2(long exponent, long precision_bits) {
  Real r(precision_bits);
  mpfr_set_ui_2exp(r.value_, 1, exponent, kRound);
  check_finite(r.value_, "pow2");
  return r;
}

Real Real::with_precision(long precision_bits) const {
  Real r(precision_bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

namespace {

std::string render_digits(mpfr_srcptr v, std::size_t digits) {
  if (mpfr_zero_p(v)) {
    std::string out = "0";
    if (digits > 1) out += "." + std::string(digits - 1, '0');
    return out + "e0";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v, kRound);
  std::string body(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!body.empty() && body.front() == '-') {
    sign = "-";
    body.erase(0, 1);
  }
  std::string out = sign + body.substr(0, 1);
  if (body.size() > 1) out += "." + body.substr(1);
  return out + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

}  // namespace

std::string Real::to_exact_string() const {
  return render_digits(value_, mpfr_get_str_ndigits(10, mpfr_get_prec(value_)));
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  check_finite(r.value_, "add");
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  check_finite(r.value_, "sub");
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  check_finite(r.value_, "mul");
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "real division by zero");
  Real r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  check_finite(r.value_, "div");
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, kRound);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), kRound);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw Error(ErrorCode::DomainError, "real sqrt of a negative number");
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), kRound);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "real log of a non-positive number");
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), kRound);
  return r;
}

Real log10(const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "real log10 of a non-positive number");
  Real r(x.precision());
  mpfr_log10(r.get(), x.get(), kRound);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), kRound);
  check_finite(r.get(), "exp");
  return r;
}

Real pow(const Real& base, long exponent) {
  if (exponent < 0 && base.is_zero()) throw Error(ErrorCode::DivisionByZero, "0 to a negative power");
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, kRound);
  check_finite(r.get(), "pow");
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

// ---------------------------------------------------------------------------
// EvalContext

EvalContext EvalContext::make(long precision_bits, long guard_bits) {
  if (precision_bits < kMinPrecision) {
    throw Error(ErrorCode::ValidationError,
                "precision_bits must be at least 64, got " + std::to_string(precision_bits));
  }
  if (guard_bits < 0) throw Error(ErrorCode::ValidationError, "guard_bits must be non-negative");
  return EvalContext{precision_bits, guard_bits};
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const EvalContext& ctx)
    : re_(ctx.precision_bits), im_(ctx.precision_bits), ctx_(ctx) {}

Scalar::Scalar(const EvalContext& ctx, long re, long im)
    : re_(re, ctx.precision_bits), im_(im, ctx.precision_bits), ctx_(ctx) {}

Scalar::Scalar(const EvalContext& ctx, const Real& re, const Real& im)
    : re_(re.with_precision(ctx.precision_bits)),
      im_(im.with_precision(ctx.precision_bits)),
      ctx_(ctx) {}

Scalar::Scalar(const EvalContext& ctx, const Real& re)
    : re_(re.with_precision(ctx.precision_bits)), im_(ctx.precision_bits), ctx_(ctx) {}

Scalar Scalar::parse(const EvalContext& ctx, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::ValidationError, "empty complex literal");

  const long prec = ctx.precision_bits;
  auto parse_imag = [&](std::string_view part) {
    if (part.empty() || part == "+") return Real(1, prec);
    if (part == "-") return Real(-1, prec);
    return Real::parse(part, prec);
  };

  if (s.back() != 'i') return Scalar(ctx, Real::parse(s, prec));

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(ctx, Real(prec), parse_imag(s));
  return Scalar(ctx, Real::parse(std::string_view(s).substr(0, split), prec),
                parse_imag(std::string_view(s).substr(split)));
}

Scalar Scalar::pi(const EvalContext& ctx) { return Scalar(ctx, Real::pi(ctx.precision_bits)); }

Scalar Scalar::imaginary_unit(const EvalContext& ctx) { return Scalar(ctx, 0, 1); }

Scalar Scalar::rebind(const EvalContext& ctx) const { return Scalar(ctx, re_, im_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r(wider(a.ctx_, b.ctx_));
  mpfr_add(r.re_.get(), a.re_.get(), b.re_.get(), kRound);
  mpfr_add(r.im_.get(), a.im_.get(), b.im_.get(), kRound);
  check_finite(r.re_.get(), "add");
  check_finite(r.im_.get(), "add");
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r(wider(a.ctx_, b.ctx_));
  mpfr_sub(r.re_.get(), a.re_.get(), b.re_.get(), kRound);
  mpfr_sub(r.im_.get(), a.im_.get(), b.im_.get(), kRound);
  check_finite(r.re_.get(), "sub");
  check_finite(r.im_.get(), "sub");
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r(wider(a.ctx_, b.ctx_));
  if (a.is_real() && b.is_real()) {
    mpfr_mul(r.re_.get(), a.re_.get(), b.re_.get(), kRound);
  } else {
    // Each component is correctly rounded.
    mpfr_fmms(r.re_.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), kRound);
    mpfr_fmma(r.im_.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), kRound);
  }
  check_finite(r.re_.get(), "mul");
  check_finite(r.im_.get(), "mul");
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  const EvalContext& ctx = wider(a.ctx_, b.ctx_);
  Scalar r(ctx);
  if (b.is_real()) {
    mpfr_div(r.re_.get(), a.re_.get(), b.re_.get(), kRound);
    mpfr_div(r.im_.get(), a.im_.get(), b.re_.get(), kRound);
  } else {
    const long w = ctx.working_bits();
    Real den(w), num_re(w), num_im(w);
    mpfr_fmma(den.get(), b.re_.get(), b.re_.get(), b.im_.get(), b.im_.get(), kRound);
    mpfr_fmma(num_re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), kRound);
    mpfr_fmms(num_im.get(), a.im_.get(), b.re_.get(), a.re_.get(), b.im_.get(), kRound);
    mpfr_div(r.re_.get(), num_re.get(), den.get(), kRound);
    mpfr_div(r.im_.get(), num_im.get(), den.get(), kRound);
  }
  check_finite(r.re_.get(), "div");
  check_finite(r.im_.get(), "div");
  return r;
}

Scalar operator-(const Scalar& a) {
  Scalar r(a.ctx_);
  mpfr_neg(r.re_.get(), a.re_.get(), kRound);
  mpfr_neg(r.im_.get(), a.im_.get(), kRound);
  return r;
}

Scalar Scalar::scaled(long factor) const {
  Scalar r(ctx_);
  mpfr_mul_si(r.re_.get(), re_.get(), factor, kRound);
  mpfr_mul_si(r.im_.get(), im_.get(), factor, kRound);
  check_finite(r.re_.get(), "scaled");
  check_finite(r.im_.get(), "scaled");
  return r;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::ValidationError, "unknown arithmetic operation");
}

Scalar scalar_elem(const Scalar& x, ElemFn fn) {
  switch (fn) {
    case ElemFn::Exp: return exp(x);
    case ElemFn::Sin: return sin(x);
    case ElemFn::Cos: return cos(x);
    case ElemFn::Sqrt: return sqrt(x);
    case ElemFn::Log: return log(x);
    case ElemFn::Neg: return -x;
    case ElemFn::Abs: return abs(x);
  }
  throw Error(ErrorCode::ValidationError, "unknown elementary function");
}

// Elementary functions work on the real/imaginary decomposition at
// precision_bits + guard_bits and round once at the end.

namespace {

struct Wide {
  Real re;
  Real im;
};

Wide widen(const Scalar& x) {
  const long w = x.context().working_bits();
  return {x.re().with_precision(w), x.im().with_precision(w)};
}

Scalar narrow(const EvalContext& ctx, const Real& re, const Real& im, const char* what) {
  check_finite(re.get(), what);
  check_finite(im.get(), what);
  return Scalar(ctx, re, im);
}

}  // namespace

Scalar exp(const Scalar& x) {
  const long w = x.context().working_bits();
  auto [a, b] = widen(x);
  Real ea(w), s(w), c(w);
  mpfr_exp(ea.get(), a.get(), kRound);
  check_finite(ea.get(), "exp");
  if (b.is_zero()) return narrow(x.context(), ea, Real(w), "exp");
  mpfr_sin_cos(s.get(), c.get(), b.get(), kRound);
  return narrow(x.context(), ea * c, ea * s, "exp");
}

Scalar sin(const Scalar& x) {
  const long w = x.context().working_bits();
  auto [a, b] = widen(x);
  Real s(w), c(w);
  mpfr_sin_cos(s.get(), c.get(), a.get(), kRound);
  if (b.is_zero()) return narrow(x.context(), s, Real(w), "sin");
  Real sh(w), ch(w);
  mpfr_sinh_cosh(sh.get(), ch.get(), b.get(), kRound);
  return narrow(x.context(), s * ch, c * sh, "sin");
}

Scalar cos(const Scalar& x) {
  const long w = x.context().working_bits();
  auto [a, b] = widen(x);
  Real s(w), c(w);
  mpfr_sin_cos(s.get(), c.get(), a.get(), kRound);
  if (b.is_zero()) return narrow(x.context(), c, Real(w), "cos");
  Real sh(w), ch(w);
  mpfr_sinh_cosh(sh.get(), ch.get(), b.get(), kRound);
  return narrow(x.context(), c * ch, -(s * sh), "cos");
}

Scalar sqrt(const Scalar& x) {
  if (x.is_zero()) return Scalar(x.context());
  const long w = x.context().working_bits();
  auto [a, b] = widen(x);
  if (b.is_zero()) {
    if (a.sign() > 0) return narrow(x.context(), sqrt(a), Real(w), "sqrt");
    return narrow(x.context(), Real(w), sqrt(-a), "sqrt");
  }
  Real r(w);
  mpfr_hypot(r.get(), a.get(), b.get(), kRound);
  const Real two(2, w);
  if (a.sign() >= 0) {
    Real t = sqrt((r + a) / two);
    return narrow(x.context(), t, b / (two * t), "sqrt");
  }
  Real t = sqrt((r - a) / two);
  Real re = abs(b) / (two * t);
  return narrow(x.context(), re, b.sign() < 0 ? -t : t, "sqrt");
}

Scalar log(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::DomainError, "log of zero");
  const long w = x.context().working_bits();
  auto [a, b] = widen(x);
  Real r(w), arg(w);
  mpfr_hypot(r.get(), a.get(), b.get(), kRound);
  mpfr_atan2(arg.get(), b.get(), a.get(), kRound);
  return narrow(x.context(), log(r), arg, "log");
}

Real modulus(const Scalar& x) {
  Real r(x.precision());
  mpfr_hypot(r.get(), x.re().get(), x.im().get(), kRound);
  check_finite(r.get(), "abs");
  return r;
}

Scalar abs(const Scalar& x) { return Scalar(x.context(), modulus(x)); }

Scalar pow(const Scalar& base, long exponent) {
  if (exponent == 0) return Scalar(base.context(), 1);
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorCode::DivisionByZero, "0 to a negative power");
    return Scalar(base.context(), 1) / pow(base, -exponent);
  }
  EvalContext wide = base.context();
  wide.precision_bits = base.context().working_bits();
  Scalar acc(wide, 1);
  Scalar sq = base.rebind(wide);
  for (unsigned long n = static_cast<unsigned long>(exponent); n != 0; n >>= 1) {
    if (n & 1U) acc *= sq;
    if (n > 1) sq *= sq;
  }
  return acc.rebind(base.context());
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_decimal_string(const Real& x, int sig_digits) {
  if (sig_digits < 1) throw Error(ErrorCode::ValidationError, "sig_digits must be at least 1");
  return render_digits(x.get(), static_cast<std::size_t>(sig_digits));
}

std::string to_decimal_string(const Scalar& x, int sig_digits) {
  std::string out = to_decimal_string(x.re(), sig_digits);
  if (x.is_real()) return out;
  out += x.im().sign() < 0 ? "-" : "+";
  out += to_decimal_string(abs(x.im()), sig_digits);
  return out + "i";
}

std::string to_exact_string(const Scalar& x) {
  std::string out = x.re().to_exact_string();
  if (x.is_real()) return out;
  out += x.im().sign() < 0 ? "-" : "+";
  out += abs(x.im()).to_exact_string();
  return out + "i";
}

double ulp_distance(const Real& a, const Real& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const long prec = a.precision();
  const Real big = max(abs(a), abs(b));
  Real diff(prec + 64);
  mpfr_sub(diff.get(), a.get(), b.get(), kRound);
  mpfr_abs(diff.get(), diff.get(), kRound);
  // ulp(big) = 2^(exponent(big) - prec)
  mpfr_mul_2si(diff.get(), diff.get(), prec - big.exponent(), kRound);
  return diff.to_double();
}

double ulp_distance(const Scalar& a, const Scalar& b) {
  const Real ma = modulus(a);
  const Real mb = modulus(b);
  if (ma.is_zero() && mb.is_zero()) return 0.0;
  const long prec = a.precision();
  const Real big = max(ma, mb);
  const Scalar d = a.rebind(EvalContext{prec + 64, a.context().guard_bits}) - b;
  Real diff = modulus(d);
  mpfr_mul_2si(diff.get(), diff.get(), prec - big.exponent(), kRound);
  return diff.to_double();
}

}  // namespace rootfam
