#pragma once

#include <vector>

#include "ltet/checked.hpp"

namespace ltet {

// Largest input accepted by factorize and the predicates built on it.
// Trial division up to sqrt(10^12) is 10^6 steps.
inline constexpr Int kFactorLimit = 1'000'000'000'000;

struct PrimePower {
  Int prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Int value = 1;
  std::vector<PrimePower> factors;  // sorted by prime

  // Recomputes the product and checks the ordering/primality invariants.
  bool valid() const;
};

/// Trial-division factorization of 1 <= t <= kFactorLimit.
Factorization factorize(Int t);

bool is_prime(Int p);

/// t = m^2 - mn + n^2 has an integer solution. Euler's criterion: 2 and every
/// prime p = 5 (mod 6) occur to even exponent. is_loeschian(0) is true.
bool is_loeschian(Int t);

/// Number of ordered pairs (m,n) in Z^2 with m^2 - mn + n^2 = k.
/// Evaluates 6 * prod(r_i + 1) over primes p_i = 1 (mod 6) dividing k, or 0
/// when 2 or a prime = 5 (mod 6) has odd exponent.
Int count_representations(Int k);

struct RSPair {
  Int r = 0;
  Int s = 0;
  Int q = 0;

  friend bool operator==(const RSPair&, const RSPair&) = default;
};

/// All (r,s) with s^2 + 3 r^2 = 2q, sorted by (|r|, r, s).
std::vector<RSPair> solve_two_q(Int q);

// A solution of a^2 + b^2 + c^2 = 3 d^2 with gcd(a,b,c) = 1. The orientation
// (sign of the whole triple) is meaningful to callers that use it as a plane
// normal; canonical() tells whether the first coordinate is positive.
struct NormalQuadruple {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  Int d = 0;

  Int q() const { return checked::add(checked::sq(a), checked::sq(b)); }

  bool canonical() const { return a > 0 || (a == 0 && (b > 0 || (b == 0 && c > 0))); }

  NormalQuadruple negated() const {
    return {checked::neg(a), checked::neg(b), checked::neg(c), d};
  }

  friend auto operator<=>(const NormalQuadruple&, const NormalQuadruple&) = default;
};

/// Checks the quadruple equation, primitivity, oddness of a,b,c,d and d > 0.
/// Throws kDomain naming the first violated condition.
void validate(const NormalQuadruple& quad);

// The scan in solve_three_d2 is quadratic in d.
inline constexpr Int kMaxQuadrupleD = 1'000'000;

/// All primitive quadruples for an odd d >= 1, one entry per distinct
/// canonical (a,b,c), sorted lexicographically on (a,b,c).
std::vector<NormalQuadruple> solve_three_d2(Int d);

/// Odd positive divisors of n >= 1 in increasing order.
std::vector<Int> odd_divisors(Int n);

}  // namespace ltet
