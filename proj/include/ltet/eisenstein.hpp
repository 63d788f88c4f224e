#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ltet/checked.hpp"

namespace ltet {

struct EisensteinPair {
  Int m = 0;
  Int n = 0;

  friend auto operator<=>(const EisensteinPair&, const EisensteinPair&) = default;
};

struct Generator {
  int form = 0;  // 1 or 2
  Int u = 0;
  Int v = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct EisensteinTriple {
  Int m = 0;
  Int n = 0;
  Int k = 0;
  bool primitive = false;
  std::optional<Generator> source;

  // Identity is (m, n, k); provenance does not take part in comparison.
  friend bool operator==(const EisensteinTriple& x, const EisensteinTriple& y) {
    return x.m == y.m && x.n == y.n && x.k == y.k;
  }
};

/// zeta(m,n) = m^2 - mn + n^2.
Int zeta(const EisensteinPair& p);
inline Int zeta(Int m, Int n) { return zeta(EisensteinPair{m, n}); }

/// Omega(k): every (m,n) in Z^2 with zeta(m,n) = k^2, found by exhaustive
/// scan. Sorted.
std::vector<EisensteinPair> omega(Int k);

/// Orbit of p under the order-12 symmetry group of zeta generated by
/// (m,n) -> (m-n, m) and (m,n) -> (n,m). Sorted.
std::vector<EisensteinPair> tau_orbit(const EisensteinPair& p);

/// Primitive Eisenstein triples with m, n > 0 and k <= kmax from the two
/// generator families. Sorted by (k, m, n), duplicates removed.
std::vector<EisensteinTriple> primitive_triples(Int kmax);

}  // namespace ltet
