#pragma once

#include "avoidance/numeric.hpp"

// Exact combinatorial kernels. Every function returns 0 outside its natural
// range instead of throwing, because the closed-form sums rely on those terms
// vanishing. Memoized tables are shared and guarded; results never depend on
// call order.
namespace avoidance {

BigInt factorial(long n);  // 0 for n < 0

// C(n, r); 0 whenever r < 0, r > n or n < 0.
BigInt binomial(long n, long r);

// Nondecreasing strings of the given length over `letters` letters:
// C(letters + length - 1, length), with one empty string over the empty alphabet.
BigInt multiset_count(long letters, long length);

// (k)_i = k (k-1) ... (k-i+1); (k)_0 = 1; 0 when i < 0.
BigInt falling_factorial(long k, long i);

BigInt catalan(long n);
BigInt central_binomial(long t);

// c(n, j): c(n, j) = c(n-1, j-1) + (n-1) c(n-1, j), c(0, 0) = 1.
BigInt stirling1_unsigned(long n, long j);

// B(r, s) = (r+s)! / (2^s (r-s)! s!); 0 when s < 0 or s > r.
BigInt bessel_first(long r, long s);

// Partitions of an n-set into i blocks, each of size at most max_block.
BigInt bounded_partitions(long n, long i, long max_block);

// a_{k,j} = sum_{m=j}^{k} C_m D_{k-m}.
BigInt a_coeff(long k, long j);

}  // namespace avoidance
