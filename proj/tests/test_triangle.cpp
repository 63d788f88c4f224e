#include <gtest/gtest.h>

#include <set>

#include "ltet/eisenstein.hpp"
#include "ltet/triangle.hpp"

namespace ltet {
namespace {

std::array<Int, 12> entries(const CoeffMatrix& cm) {
  return {cm.mx, cm.nx, cm.my, cm.ny, cm.mz, cm.nz, cm.mu, cm.nu, cm.mv, cm.nv, cm.mw, cm.nw};
}

std::vector<NormalQuadruple> quads_up_to(Int dmax, bool both_orientations) {
  std::vector<NormalQuadruple> out;
  for (Int d = 1; d <= dmax; d += 2) {
    for (const auto& q : solve_three_d2(d)) {
      out.push_back(q);
      if (both_orientations) out.push_back(q.negated());
    }
  }
  return out;
}

TEST(CoeffMatrix, ExplicitPairMatchesDirectSubstitution) {
  const auto cm = coeff_matrix({1, 1, 1, 1}, RSPair{1, 1, 0});
  EXPECT_EQ(entries(cm), (std::array<Int, 12>{-1, -1, 1, 0, 0, 1, -1, 0, 0, -1, 1, 1}));
  EXPECT_EQ(cm.m_uvw(), (Vec3{-1, 0, 1}));
  EXPECT_EQ(cm.m_xyz(), (Vec3{-1, 1, 0}));
  EXPECT_EQ(cm.m_uvw().x + cm.m_uvw().y + cm.m_uvw().z, 0);
  EXPECT_EQ(cm.m_xyz().x + cm.m_xyz().y + cm.m_xyz().z, 0);
}

TEST(CoeffMatrix, CanonicalChoiceIsFirstAdmissible) {
  // Frozen from an exact-fraction evaluation of the coefficient formulas.
  const auto unit = coeff_matrix({1, 1, 1, 1});
  EXPECT_EQ(unit.rs, (RSPair{0, -2, 2}));
  EXPECT_EQ(entries(unit), (std::array<Int, 12>{0, 1, -1, -1, 1, 0, 1, 1, -1, 0, 0, -1}));

  const auto big = coeff_matrix({187, 113, 73, 133});
  EXPECT_EQ(big.rs.r, -45);
  EXPECT_EQ(big.rs.s, -299);
  EXPECT_EQ(entries(big),
            (std::array<Int, 12>{32, 107, -135, -148, 127, -45, 107, 75, -148, -13, -45, -172}));

  const auto five = coeff_matrix({1, 5, 7, 5});
  EXPECT_EQ(five.rs.r, -1);
  EXPECT_EQ(five.rs.s, -7);
}

TEST(CoeffMatrix, RejectsBadPairsAndQuadruples) {
  EXPECT_THROW(coeff_matrix({1, 1, 1, 1}, RSPair{1, 2, 0}), Error);
  EXPECT_THROW(coeff_matrix({1, 1, 1, 3}), Error);
  try {
    coeff_matrix({3, 3, 3, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(CoeffMatrix, GeneratorsLieInPlaneAndRsCongruence) {
  for (const auto& quad : quads_up_to(101, false)) {
    const auto cm = coeff_matrix(quad);
    const Vec3 n{quad.a, quad.b, quad.c};
    for (const Vec3& g : {cm.m_uvw(), cm.n_uvw(), cm.m_xyz(), cm.n_xyz()}) {
      EXPECT_EQ(dot(n, g), 0);
    }
    EXPECT_EQ(cm.rs.s * cm.rs.s % 3, 1);
  }
}

TEST(TrianglePoints, Examples) {
  const auto cm = coeff_matrix({1, 1, 1, 1}, RSPair{1, 1, 0});
  auto t = triangle_points(cm, 1, 0);
  EXPECT_EQ(t.p, (Vec3{-1, 0, 1}));
  EXPECT_EQ(t.q, (Vec3{-1, 1, 0}));
  EXPECT_EQ(t.side_sq, 2);
  t = triangle_points(cm, 3, 0);
  EXPECT_EQ(t.p, (Vec3{-3, 0, 3}));
  EXPECT_EQ(t.q, (Vec3{-3, 3, 0}));
  EXPECT_EQ(t.side_sq, 18);
  EXPECT_EQ(triangle_points(cm, 1, 1).side_sq, 2);
  try {
    triangle_points(cm, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(TrianglePoints, EquilateralInPlaneWithSideLaw) {
  for (const auto& quad : quads_up_to(15, true)) {
    const auto cm = coeff_matrix(quad);
    const Vec3 normal{quad.a, quad.b, quad.c};
    for (Int m = -5; m <= 5; ++m)
      for (Int n = -5; n <= 5; ++n) {
        if (m == 0 && n == 0) continue;
        const auto t = triangle_points(cm, m, n);
        EXPECT_EQ(verify_equilateral(t.p, t.q), t.side_sq);
        EXPECT_EQ(dot(normal, t.p), 0);
        EXPECT_EQ(dot(normal, t.q), 0);
        EXPECT_EQ(t.side_sq, 2 * quad.d * quad.d * zeta(m, n));
        EXPECT_TRUE(t.side_sq % 2 == 0);
        EXPECT_EQ(is_square(t.side_sq / 2), is_square(zeta(m, n)));
      }
  }
}

// Integer coefficients (m, n) with v = m * mv - n * nv, if any.
bool in_lattice(const Vec3& v, const Vec3& mv, const Vec3& nv) {
  const Vec3 a = mv;
  const Vec3 b = -nv;
  const Vec3 axb = cross(a, b);
  const Int den = norm_sq(axb);
  const Int m_num = dot(cross(v, b), axb);
  const Int n_num = dot(cross(a, v), axb);
  if (m_num % den != 0 || n_num % den != 0) return false;
  return (m_num / den) * a + (n_num / den) * b == v;
}

// v can be rotated by 60 degrees about the normal onto a lattice point.
bool extendable(const Vec3& v, const NormalQuadruple& quad) {
  const Vec3 n{quad.a, quad.b, quad.c};
  const Vec3 nxv = cross(n, v);
  for (Int sign : {1, -1}) {
    const Vec3 twice_d_w = quad.d * v + sign * nxv;  // 2d * rotated v
    const Int den = 2 * quad.d;
    if (twice_d_w.x % den == 0 && twice_d_w.y % den == 0 && twice_d_w.z % den == 0) return true;
  }
  return false;
}

TEST(TrianglePoints, GeneratedLatticeIsComplete) {
  constexpr Int box = 20;
  for (const auto& quad : quads_up_to(5, true)) {
    const auto cm = coeff_matrix(quad);
    int checked = 0;
    for (Int x = -box; x <= box; ++x)
      for (Int y = -box; y <= box; ++y) {
        // a x + b y + c z = 0 with c odd, so at most one z.
        const Int rest = -(quad.a * x + quad.b * y);
        if (rest % quad.c != 0) continue;
        const Int z = rest / quad.c;
        if (z < -box || z > box || (x == 0 && y == 0 && z == 0)) continue;
        const Vec3 v{x, y, z};
        EXPECT_EQ(extendable(v, quad), in_lattice(v, cm.m_uvw(), cm.n_uvw()))
            << to_string(v) << " quad " << quad.a << "," << quad.b << "," << quad.c;
        EXPECT_EQ(extendable(v, quad), in_lattice(v, cm.m_xyz(), cm.n_xyz()));
        ++checked;
      }
    EXPECT_GT(checked, 0);
  }
}

TEST(VerifyEquilateral, Examples) {
  EXPECT_EQ(verify_equilateral({-1, 0, 1}, {-1, 1, 0}), 2);
  EXPECT_THROW(verify_equilateral({1, 0, 0}, {0, 1, 0}), Error);
  EXPECT_THROW(verify_equilateral({0, 0, 0}, {0, 0, 0}), Error);
  try {
    verify_equilateral({1, 0, 0}, {0, 1, 0});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kVerification);
    EXPECT_NE(std::string(e.what()).find("|P-Q|^2 = 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace ltet
