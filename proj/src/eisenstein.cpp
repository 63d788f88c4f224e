#include "ltet/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace ltet {

Int zeta(const EisensteinPair& p) {
  using namespace checked;
  return add(sub(sq(p.m), mul(p.m, p.n)), sq(p.n));
}

std::vector<EisensteinPair> omega(Int k) {
  if (k < 1) fail(ErrorKind::kRange, "omega: k must be positive");
  const Int target = checked::sq(k);
  // zeta(m,n) >= 3/4 max(|m|,|n|)^2, so |m|,|n| <= ceil(2k/sqrt 3) suffices.
  Int bound = isqrt(checked::mul(4, target) / 3);
  if (3 * bound * bound < 4 * target) ++bound;
  bound += 1;
  std::vector<EisensteinPair> out;
  for (Int m = -bound; m <= bound; ++m) {
    for (Int n = -bound; n <= bound; ++n) {
      if (zeta(m, n) == target) out.push_back({m, n});
    }
  }
  return out;
}

std::vector<EisensteinPair> tau_orbit(const EisensteinPair& p) {
  std::set<EisensteinPair> seen{p};
  std::vector<EisensteinPair> frontier{p};
  while (!frontier.empty()) {
    EisensteinPair cur = frontier.back();
    frontier.pop_back();
    const EisensteinPair images[] = {
        {checked::sub(cur.m, cur.n), cur.m},  // rotation by 60 degrees
        {cur.n, cur.m},                       // reflection
    };
    for (const auto& img : images) {
      if (seen.insert(img).second) frontier.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<EisensteinTriple> primitive_triples(Int kmax) {
  if (kmax < 1) fail(ErrorKind::kRange, "primitive_triples: kmax must be positive");
  // k = u^2 - uv + v^2 >= 3/4 max(u,v)^2.
  const Int limit = isqrt(checked::mul(4, kmax) / 3) + 1;
  std::vector<EisensteinTriple> found;
  for (Int u = 1; u <= limit; ++u) {
    for (Int v = 1; v <= limit; ++v) {
      if (std::gcd(u, v) != 1 || (u + v) % 3 == 0) continue;
      Int k = zeta(u, v);
      if (k > kmax) continue;
      auto emit = [&](int form, Int m, Int n) {
        if (m <= 0 || n <= 0) return;
        found.push_back({m, n, k, std::gcd(m, n) == 1, Generator{form, u, v}});
      };
      if (v > u) emit(1, v * v - u * u, 2 * u * v - u * u);
      if (2 * v > u && 2 * u > v) emit(2, 2 * u * v - u * u, 2 * u * v - v * v);
    }
  }
  // Stable sort keeps the generator met first in scan order.
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.k, x.m, x.n) < std::tie(y.k, y.m, y.n);
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace ltet
