// Generated by gen_corpus_derivatives.py; do not edit.
#pragma once

#include <array>
#include <string_view>

#include "rootfam/numeric.hpp"

namespace oracle {

using rootfam::Scalar;

/// f1^(k)(x), k = 0..4.
inline std::array<Scalar, 5> f1_derivatives(const Scalar& x) {
  const auto& ctx = x.context();
  auto K = [&](long v) { return Scalar(ctx, v); };
  const Scalar I = Scalar::imaginary_unit(ctx);
  (void)I;
  const Scalar t0 = pow(x, 2);
  const Scalar t1 = (K(100) + t0 + pow(x, 5));
  const Scalar t2 = sin(x);
  const Scalar t3 = (t2 * x);
  const Scalar t4 = sqrt(K(2));
  const Scalar t5 = ((K(1) / K(2)) * t4 * x);
  const Scalar t6 = sin(t5);
  const Scalar t7 = pow(t6, 2);
  const Scalar t8 = (t3 + (K(-2) * t7));
  const Scalar t9 = ((K(2) * x) + (K(5) * pow(x, 4)));
  const Scalar t10 = cos(x);
  const Scalar t11 = (t10 * x);
  const Scalar t12 = cos(t5);
  const Scalar t13 = (t11 + t2 + (K(-2) * t12 * t4 * t6));
  const Scalar t14 = (K(2) + (K(20) * pow(x, 3)));
  const Scalar t15 = pow(t12, 2);
  const Scalar t16 = ((K(-1) * t8) + (K(-2) * t15) + (K(2) * t10));
  const Scalar t17 = ((K(-1) * t11) + (K(-3) * t2) + (K(4) * t12 * t4 * t6));
  return {(t1 * t8), ((t1 * t13) + (t8 * t9)), ((t1 * t16) + (t14 * t8) + (K(2) * t13 * t9)), ((t1 * t17) + (K(3) * t13 * t14) + (K(3) * t16 * t9) + (K(60) * t0 * t8)), ((t1 * (t3 + (K(-4) * t10) + (K(-4) * t7) + (K(4) * t15))) + (K(4) * t17 * t9) + (K(6) * t14 * t16) + (K(120) * t8 * x) + (K(240) * t0 * t13))};
}

/// f2^(k)(x), k = 0..4.
inline std::array<Scalar, 5> f2_derivatives(const Scalar& x) {
  const auto& ctx = x.context();
  auto K = [&](long v) { return Scalar(ctx, v); };
  const Scalar I = Scalar::imaginary_unit(ctx);
  (void)I;
  const Scalar t0 = cos(x);
  const Scalar t1 = (K(3) * t0);
  const Scalar t2 = pow(x, 2);
  const Scalar t3 = exp(t2);
  const Scalar t4 = (t3 * x);
  const Scalar t5 = sin(x);
  const Scalar t6 = pow(t5, 2);
  const Scalar t7 = (K(5) + t1 + t4 + (K(-1) * t6));
  const Scalar t8 = (K(6) * t5);
  const Scalar t9 = (t0 * t5);
  const Scalar t10 = (K(2) * t3);
  const Scalar t11 = (t2 * t3);
  const Scalar t12 = (t10 + (K(-1) * t8) + (K(-4) * t9) + (K(4) * t11));
  const Scalar t13 = (K(3) * t5);
  const Scalar t14 = (t3 + (K(-1) * t13) + (K(-2) * t9) + (t10 * t2));
  const Scalar t15 = (K(6) * t0);
  const Scalar t16 = pow(t0, 2);
  const Scalar t17 = (t3 * pow(x, 3));
  const Scalar t18 = ((K(-1) * t15) + (K(-4) * t16) + (K(4) * t6) + (K(8) * t17) + (K(12) * t4));
  const Scalar t19 = (t3 * pow(x, 4));
  const Scalar t20 = (t8 + (K(12) * t3) + (K(16) * t19) + (K(16) * t9) + (K(48) * t11));
  const Scalar t21 = ((K(-1) * t1) + (K(-2) * t16) + (K(2) * t6) + (K(4) * t17) + (K(6) * t4));
  return {pow(t7, 2), (t12 * t7), ((t12 * t14) + (t18 * t7)), ((t12 * t21) + (t20 * t7) + (K(2) * t14 * t18)), ((t12 * (t13 + (K(6) * t3) + (K(8) * t19) + (K(8) * t9) + (K(24) * t11))) + (t7 * (t15 + (K(-16) * t6) + (K(16) * t16) + (K(120) * t4) + (K(160) * t17) + (K(32) * t3 * pow(x, 5)))) + (K(3) * t14 * t20) + (K(3) * t18 * t21))};
}

/// f3^(k)(x), k = 0..4.
inline std::array<Scalar, 5> f3_derivatives(const Scalar& x) {
  const auto& ctx = x.context();
  auto K = [&](long v) { return Scalar(ctx, v); };
  const Scalar I = Scalar::imaginary_unit(ctx);
  (void)I;
  const Scalar t0 = (K(2) + x + (K(-1) * I));
  const Scalar t1 = sin(t0);
  const Scalar t2 = pow(t1, 2);
  const Scalar t3 = (K(4) * x);
  const Scalar t4 = pow(x, 2);
  const Scalar t5 = exp((K(5) + t3 + t4));
  const Scalar t6 = (K(-1) + t5);
  const Scalar t7 = pow(t6, 3);
  const Scalar t8 = (t2 * t7);
  const Scalar t9 = cos(t0);
  const Scalar t10 = (t1 * t9);
  const Scalar t11 = (t10 * t7);
  const Scalar t12 = (K(4) + (K(2) * x));
  const Scalar t13 = (t5 * pow(t6, 2));
  const Scalar t14 = (t13 * t2);
  const Scalar t15 = (K(3) * t14);
  const Scalar t16 = (t12 * t15);
  const Scalar t17 = pow(t9, 2);
  const Scalar t18 = (t17 * t7);
  const Scalar t19 = (K(6) * t2);
  const Scalar t20 = pow(t12, 2);
  const Scalar t21 = (K(8) * x);
  const Scalar t22 = exp((K(10) + t21 + (K(2) * t4)));
  const Scalar t23 = (t22 * t6);
  const Scalar t24 = (t19 * t23);
  const Scalar t25 = (t20 * t24);
  const Scalar t26 = (K(12) * t12);
  const Scalar t27 = (t10 * t13);
  const Scalar t28 = (t2 * t23);
  const Scalar t29 = (t26 * t28);
  const Scalar t30 = (t13 * t17);
  const Scalar t31 = pow(t12, 3);
  const Scalar t32 = (t22 * t5);
  const Scalar t33 = (t19 * t32);
  const Scalar t34 = (K(16) + t21);
  const Scalar t35 = (t24 * t34);
  const Scalar t36 = (t24 * t31);
  const Scalar t37 = (K(8) + t3);
  const Scalar t38 = (K(36) * t20);
  const Scalar t39 = (t10 * t23);
  const Scalar t40 = (t2 * t32);
  const Scalar t41 = (K(48) * t20);
  const Scalar t42 = pow(t12, 4);
  const Scalar t43 = (K(12) * t40);
  const Scalar t44 = (K(48) * t31);
  const Scalar t45 = (K(24) * t27);
  return {t8, (t16 + (K(2) * t11)), (t25 + (K(-2) * t8) + (K(2) * t18) + (t13 * t19) + (t15 * t20) + (t26 * t27)), (t29 + t35 + t36 + (K(-8) * t11) + (K(36) * t27) + (t15 * t31) + (t15 * t34) + (t25 * t37) + (t31 * t33) + (t38 * t39) + (K(-1) * t14 * t26) + (K(18) * t12 * t30) + (K(18) * t20 * t27)), ((K(-36) * t14) + (K(-8) * t18) + (K(8) * t8) + (K(72) * t28) + (K(72) * t30) + (t12 * t35) + (t15 * t42) + (t16 * t34) + (t24 * t42) + (t25 * pow(t37, 2)) + (t29 * t37) + (t30 * t38) + (t31 * t45) + (t34 * t45) + (t36 * t37) + (t39 * t44) + (t40 * t41) + (t42 * t43) + (K(-48) * t12 * t27) + (K(-12) * t14 * t20) + (K(48) * t34 * t39) + (K(96) * t12 * t39) + (t10 * t32 * t44) + (t12 * t33 * t34) + (t31 * t37 * t43) + (t37 * t39 * t41) + (K(12) * t28 * t34 * t37) + (K(72) * t17 * t20 * t23))};
}

/// f4^(k)(x), k = 0..4.
inline std::array<Scalar, 5> f4_derivatives(const Scalar& x) {
  const auto& ctx = x.context();
  auto K = [&](long v) { return Scalar(ctx, v); };
  const Scalar I = Scalar::imaginary_unit(ctx);
  (void)I;
  const Scalar t0 = sin(x);
  const Scalar t1 = (x + (K(-1) * t0));
  const Scalar t2 = cos(x);
  const Scalar t3 = (K(4) * t2);
  const Scalar t4 = (K(4) + (K(-1) * t3));
  const Scalar t5 = pow(t1, 3);
  const Scalar t6 = (K(4) * t0 * t5);
  const Scalar t7 = (K(3) * t2);
  const Scalar t8 = (K(3) + (K(-1) * t7));
  const Scalar t9 = pow(t1, 2);
  const Scalar t10 = (t4 * t9);
  const Scalar t11 = (t8 * t9);
  const Scalar t12 = (K(2) + (K(-2) * t2));
  const Scalar t13 = (t12 * t4 * t8);
  const Scalar t14 = (t0 * t1 * t4);
  return {pow(t1, 4), (t4 * t5), (t6 + (t10 * t8)), ((t1 * t13) + (t3 * t5) + (K(3) * t0 * t10) + (K(8) * t0 * t11)), ((K(-1) * t6) + (t10 * t7) + (t13 * (K(1) + (K(-1) * t2))) + (K(2) * t14 * t8) + (K(6) * t12 * t14) + (K(12) * t11 * t2) + (K(36) * t9 * pow(t0, 2)) + (K(12) * t0 * t1 * t12 * t8))};
}

/// g2^(k)(x), k = 0..4.
inline std::array<Scalar, 5> g2_derivatives(const Scalar& x) {
  const auto& ctx = x.context();
  auto K = [&](long v) { return Scalar(ctx, v); };
  const Scalar I = Scalar::imaginary_unit(ctx);
  (void)I;
  const Scalar t0 = cos(x);
  const Scalar t1 = (K(3) * t0);
  const Scalar t2 = pow(x, 2);
  const Scalar t3 = exp(t2);
  const Scalar t4 = (t3 * x);
  const Scalar t5 = sin(x);
  const Scalar t6 = pow(t5, 2);
  const Scalar t7 = (K(3) * t5);
  const Scalar t8 = (t0 * t5);
  const Scalar t9 = (t2 * t3);
  const Scalar t10 = pow(t0, 2);
  const Scalar t11 = (t3 * pow(x, 3));
  return {(K(5) + t1 + t4 + (K(-1) * t6)), (t3 + (K(-1) * t7) + (K(-2) * t8) + (K(2) * t9)), ((K(-1) * t1) + (K(-2) * t10) + (K(2) * t6) + (K(4) * t11) + (K(6) * t4)), (t7 + (K(6) * t3) + (K(8) * t8) + (K(24) * t9) + (K(8) * t3 * pow(x, 4))), (t1 + (K(-8) * t6) + (K(8) * t10) + (K(60) * t4) + (K(80) * t11) + (K(16) * t3 * pow(x, 5)))};
}

inline std::array<Scalar, 5> corpus_derivatives(std::string_view name, const Scalar& x) {
  if (name == "f1") return f1_derivatives(x);
  if (name == "f2") return f2_derivatives(x);
  if (name == "f3") return f3_derivatives(x);
  if (name == "f4") return f4_derivatives(x);
  if (name == "g2") return g2_derivatives(x);
  throw rootfam::Error(rootfam::ErrorCode::ValidationError, "no oracle for function");
}

}  // namespace oracle
