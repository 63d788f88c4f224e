#include <cstdlib>
#include <numeric>

#include "ltet/checked.hpp"
#include "ltet/vec3.hpp"

namespace ltet {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kRange: return "range error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kConstruction: return "construction error";
    case ErrorKind::kVerification: return "verification error";
    case ErrorKind::kPrecondition: return "precondition error";
    case ErrorKind::kDegenerate: return "degenerate input";
    case ErrorKind::kRefused: return "refused";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kInternal: return "internal error";
  }
  return "unknown error";
}

Int isqrt(Int v) {
  if (v < 0) fail(ErrorKind::kDomain, "isqrt of negative value");
  if (v < 2) return v;
  auto u = static_cast<unsigned __int128>(v);
  // Newton from a power-of-two upper bound.
  unsigned __int128 x = 1;
  while (x * x <= u) x <<= 1;
  while (true) {
    unsigned __int128 y = (x + u / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > u) --x;
  while ((x + 1) * (x + 1) <= u) ++x;
  return static_cast<Int>(x);
}

bool is_square(Int v, Int* root) {
  if (v < 0) return false;
  Int r = isqrt(v);
  if (static_cast<__int128>(r) * r != v) return false;
  if (root) *root = r;
  return true;
}

Int gcd(Int a, Int b) { return std::gcd(checked::abs(a), checked::abs(b)); }

Int dot(const Vec3& a, const Vec3& b) {
  return checked::add(checked::add(checked::mul(a.x, b.x), checked::mul(a.y, b.y)),
                      checked::mul(a.z, b.z));
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  using checked::mul, checked::sub;
  return {sub(mul(a.y, b.z), mul(a.z, b.y)), sub(mul(a.z, b.x), mul(a.x, b.z)),
          sub(mul(a.x, b.y), mul(a.y, b.x))};
}

Int norm_sq(const Vec3& v) { return dot(v, v); }

Int dist_sq(const Vec3& a, const Vec3& b) { return norm_sq(a - b); }

std::string to_string(const Vec3& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
         std::to_string(v.z) + ")";
}

}  // namespace ltet
