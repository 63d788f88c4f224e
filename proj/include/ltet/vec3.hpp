#pragma once

#include <array>
#include <compare>
#include <string>

#include "ltet/checked.hpp"

namespace ltet {

// Integer lattice point / vector in Z^3. All arithmetic is overflow-checked.
struct Vec3 {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  friend auto operator<=>(const Vec3&, const Vec3&) = default;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {checked::add(a.x, b.x), checked::add(a.y, b.y),
            checked::add(a.z, b.z)};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {checked::sub(a.x, b.x), checked::sub(a.y, b.y),
            checked::sub(a.z, b.z)};
  }
  friend Vec3 operator*(Int s, const Vec3& v) {
    return {checked::mul(s, v.x), checked::mul(s, v.y), checked::mul(s, v.z)};
  }
  Vec3 operator-() const {
    return {checked::neg(x), checked::neg(y), checked::neg(z)};
  }

  std::array<Int, 3> to_array() const { return {x, y, z}; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

[[nodiscard]] Int dot(const Vec3& a, const Vec3& b);
[[nodiscard]] Vec3 cross(const Vec3& a, const Vec3& b);
[[nodiscard]] Int norm_sq(const Vec3& v);
[[nodiscard]] Int dist_sq(const Vec3& a, const Vec3& b);
std::string to_string(const Vec3& v);

}  // namespace ltet
