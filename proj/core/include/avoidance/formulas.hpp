#pragma once

#include "avoidance/numeric.hpp"
#include "avoidance/series.hpp"

// Closed forms, recurrences and generating-function routes for f_T(n, k).
// Recurrences treat f(n, k) = 0 for n < 0 and use f(n, 0) = delta_{n,0}.
// Inputs are n, k >= 0 unless stated.
namespace avoidance::formulas {

// Two-letter patterns.
BigInt f11(int n, int k);  // (k)_n
BigInt f12(int n, int k);  // C(n+k-1, n)

// 123 / 132: 2^{n-2(k-2)} sum_j a_{k-2,j} C(n+2j, n). Defined for k >= 2 and
// n >= 2(k-2); throws OutsideValidity elsewhere.
BigInt f123(int n, int k);
bool f123_valid(int n, int k);

// 111: sum_i B(i, n-i) (k)_i, and n! [x^n] (1 + x + x^2/2)^k.
BigInt f111(int n, int k);
BigInt f111_egf(int n, int k);

// 112 ~ 121.
BigInt f112(int n, int k);       // sum_j C(n+k-j-1, n) c(n, n-j)
BigInt rec_112(int n, int k);    // f(n,k) - f(n,k-1) = f(n-1,k) + (n-1) f(n-1,k-1)
BigInt g112_ogf(int n, int k);   // [y^k] of the product formula for G_112(n; y)

// {111,112} ~ {111,121}.
BigInt f111_112(int n, int k);   // f(n,k-1) + n f(n-1,k-1) + (n-1) f(n-2,k-1)
BigInt f111_112_double_sum(int n, int k);

// Pairs.
BigInt rec_112_121(int n, int k);
BigInt rec_112_211(int n, int k);
BigInt rec_112_212_literal(int n, int k);
BigInt f112_221(int n, int k);
BigInt f121_212(int n, int k);

// Triple {112,121,211}.
BigInt f112_121_211(int n, int k);      // recurrence
BigInt f112_121_211_egf(int n, int k);  // n! [x^n] (1 + (e^x - 1)((1+x)^k - 1)/x)
Rational f112_121_211_sum(int n, int k);  // explicit binomial sum, may be fractional

// <1>_l: recurrence, bounded-partition sum, and n! [x^n] (sum_{j<l} x^j/j!)^k.
BigInt single_repeat_rec(int n, int k, int l);
BigInt single_repeat_partition(int n, int k, int l);
BigInt single_repeat_egf(int n, int k, int l);

// v_{m,l}: f(n+1,k) - f(n,k) = sum_{j=0}^{m+l-1} C(n,j) f(n+1-j,k-1). Needs m + l >= 1.
BigInt rec_vml(int n, int k, int m, int l);

// sum_{j=0}^{p} C(n, j) = n! [x^n] e^x sum_{j<=p} x^j/j!, the k = 2 count for v_{p,0}.
BigInt f_vp0_k2(int n, int p);

// The two readings of the integral identity for F_{v_{p,0}}(x; k):
//   F - int F = sum_{j=0}^{p-1} (-1)^j d(F_{k-1}) sum_{i=0}^{p-1-j} x^i/i!
// where d is the p-fold antiderivative in every summand (literal) or the j-fold
// one in summand j (per_summand).
enum class IntegralReading { literal, per_summand };

// Right-hand side applied to F_{v_{p,0}}(x; k-1) built by rec_vml, minus the left-hand
// side applied to F_{v_{p,0}}(x; k). Zero iff the identity holds through x^order.
Series vp0_integral_identity_residual(int p, int k, int order, IntegralReading reading);

// n! [x^n] of the F(x; k) the identity determines from the recurrence-built F(x; k-1).
Rational vp0_integral_identity_count(int n, int k, int p, IntegralReading reading);

// n! [x^n y^j] of the bivariate closed forms, with j = k (literal indexing) or
// j = k - 1 (shifted indexing, k >= 1).
Rational f112_bivariate_count(int n, int k, bool shifted);
Rational f111_112_bivariate_count(int n, int k, bool shifted);

}  // namespace avoidance::formulas
