#include "ltet/numtheory.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

namespace ltet {
namespace {

void check_factor_range(Int t, const char* what) {
  if (t < 1 || t > kFactorLimit) {
    fail(ErrorKind::kRange, std::string(what) + ": argument " + std::to_string(t) +
                                " outside [1, " + std::to_string(kFactorLimit) + "]");
  }
}

}  // namespace

bool is_prime(Int p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (Int i = 5; i <= p / i; i += 6) {
    if (p % i == 0 || p % (i + 2) == 0) return false;
  }
  return true;
}

bool Factorization::valid() const {
  Int prod = 1;
  Int prev = 1;
  for (const auto& f : factors) {
    if (f.prime <= prev || f.exponent < 1 || !is_prime(f.prime)) return false;
    for (int e = 0; e < f.exponent; ++e) prod = checked::mul(prod, f.prime);
    prev = f.prime;
  }
  return prod == value;
}

Factorization factorize(Int t) {
  check_factor_range(t, "factorize");
  Factorization out;
  out.value = t;
  Int rest = t;
  auto take = [&](Int p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  take(2);
  take(3);
  for (Int p = 5; p <= rest / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

bool is_loeschian(Int t) {
  if (t == 0) return true;
  if (t < 0) fail(ErrorKind::kRange, "is_loeschian: negative argument");
  for (const auto& f : factorize(t).factors) {
    bool restricted = f.prime == 2 || f.prime % 6 == 5;
    if (restricted && f.exponent % 2 != 0) return false;
  }
  return true;
}

Int count_representations(Int k) {
  check_factor_range(k, "count_representations");
  Int count = 6;
  for (const auto& f : factorize(k).factors) {
    if (f.prime == 3) continue;
    if (f.prime % 6 == 1) {
      count = checked::mul(count, f.exponent + 1);
    } else if (f.exponent % 2 != 0) {
      return 0;
    }
  }
  return count;
}

std::vector<RSPair> solve_two_q(Int q) {
  if (q < 1) fail(ErrorKind::kRange, "solve_two_q: q must be positive");
  Int two_q = checked::mul(2, q);
  std::vector<RSPair> out;
  Int rmax = isqrt(two_q / 3);
  for (Int r = -rmax; r <= rmax; ++r) {
    Int rest = two_q - 3 * r * r;
    Int s;
    if (!is_square(rest, &s)) continue;
    out.push_back({r, -s, q});
    if (s != 0) out.push_back({r, s, q});
  }
  std::sort(out.begin(), out.end(), [](const RSPair& x, const RSPair& y) {
    auto key = [](const RSPair& p) { return std::tuple(p.r < 0 ? -p.r : p.r, p.r, p.s); };
    return key(x) < key(y);
  });
  return out;
}

void validate(const NormalQuadruple& quad) {
  auto why = [&](const std::string& reason) {
    fail(ErrorKind::kDomain, "invalid quadruple (" + std::to_string(quad.a) + "," +
                                 std::to_string(quad.b) + "," + std::to_string(quad.c) +
                                 "," + std::to_string(quad.d) + "): " + reason);
  };
  if (quad.d <= 0) why("d must be positive");
  Int lhs = checked::add(quad.q(), checked::sq(quad.c));
  if (lhs != checked::mul(3, checked::sq(quad.d))) why("a^2+b^2+c^2 != 3d^2");
  if (gcd(gcd(quad.a, quad.b), quad.c) != 1) why("gcd(a,b,c) != 1");
  if (quad.d % 2 == 0) why("d must be odd");
}

std::vector<NormalQuadruple> solve_three_d2(Int d) {
  if (d < 1 || d % 2 == 0) {
    fail(ErrorKind::kDomain, "solve_three_d2: d must be a positive odd integer, got " +
                                 std::to_string(d));
  }
  if (d > kMaxQuadrupleD) {
    fail(ErrorKind::kRange, "solve_three_d2: d above " + std::to_string(kMaxQuadrupleD));
  }
  const Int target = checked::mul(3, checked::sq(d));
  std::vector<NormalQuadruple> out;
  // Sorted representatives 0 < a <= b <= c. a, b, c are odd for primitive
  // solutions with d odd, so none is zero.
  for (Int a = 1; 3 * a * a <= target; ++a) {
    for (Int b = a; a * a + 2 * b * b <= target; ++b) {
      Int c;
      if (!is_square(target - a * a - b * b, &c) || c < b) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      std::array<Int, 3> base{a, b, c};
      do {
        for (int signs = 0; signs < 4; ++signs) {
          Int sb = (signs & 1) ? -base[1] : base[1];
          Int sc = (signs & 2) ? -base[2] : base[2];
          out.push_back({base[0], sb, sc, d});
        }
      } while (std::next_permutation(base.begin(), base.end()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> odd_divisors(Int n) {
  if (n < 1) fail(ErrorKind::kRange, "odd_divisors: n must be positive");
  std::vector<Int> out;
  for (Int i = 1; i <= n / i; ++i) {
    if (n % i != 0) continue;
    if (i % 2 == 1) out.push_back(i);
    Int j = n / i;
    if (j != i && j % 2 == 1) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ltet
