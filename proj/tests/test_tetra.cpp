#include <gtest/gtest.h>

#include <random>

#include "ltet/eisenstein.hpp"
#include "ltet/tetra.hpp"

namespace ltet {
namespace {

const Vec3 kA{376, -841, 2265};
const Vec3 kB{-1005, -2116, 701};
const Vec3 kC{1411, -1965, 356};

bool parallel(const Vec3& u, const Vec3& v) { return cross(u, v).is_zero(); }

TEST(VerifyRegular, Examples) {
  EXPECT_EQ(verify_regular({0, 0, 0}, {-1, 0, 1}, {-1, 1, 0}, {0, 1, 1}), 2);
  EXPECT_EQ(verify_regular({0, 0, 0}, kA, kB, kC), 5978882);
  EXPECT_EQ(5978882, 2 * 1729 * 1729);
  EXPECT_THROW(verify_regular({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), Error);
  EXPECT_THROW(verify_regular({0, 0, 0}, {0, 0, 0}, {0, 1, 1}, {1, 0, 1}), Error);
  try {
    verify_regular({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kVerification);
    EXPECT_NE(std::string(e.what()).find("p1-p2"), std::string::npos);
  }
}

TEST(Complete, UnitTriangleHasOneCompletion) {
  const NormalQuadruple quad{1, 1, 1, 1};
  const auto cm = coeff_matrix(quad, RSPair{1, 1, 0});
  const auto out = complete_tetrahedron(quad, cm, 1, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].provenance.sign, +1);
  EXPECT_EQ(out[0].tetra.vertices,
            (std::array<Vec3, 4>{Vec3{-1, 0, 1}, {-1, 1, 0}, {0, 0, 0}, {0, 1, 1}}));
  EXPECT_EQ(out[0].tetra.side_sq, 2);
  EXPECT_EQ(out[0].tetra.ell, 1);
}

TEST(Complete, MultipleOfThreeHasTwoCompletions) {
  const NormalQuadruple quad{1, 1, 1, 1};
  const auto cm = coeff_matrix(quad, RSPair{1, 1, 0});
  const auto out = complete_tetrahedron(quad, cm, 3, 0);
  ASSERT_EQ(out.size(), 2u);
  auto has = [](const LatticeTetrahedron& t, const Vec3& v) {
    return std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end();
  };
  EXPECT_TRUE(has(out[0].tetra, {0, 3, 3}));
  EXPECT_TRUE(has(out[1].tetra, {-4, -1, -1}));
  EXPECT_EQ(out[0].tetra.side_sq, 18);
  EXPECT_EQ(out[1].tetra.side_sq, 18);
}

TEST(Complete, NonSquareZetaIsPreconditionError) {
  const NormalQuadruple quad{1, 1, 1, 1};
  const auto cm = coeff_matrix(quad, RSPair{1, 1, 0});
  try {
    complete_tetrahedron(quad, cm, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_THROW(complete_tetrahedron({1, 1, -1, 1}, cm, 1, 0), Error);
}

TEST(Complete, SignDichotomySampled) {
  std::vector<NormalQuadruple> quads;
  for (Int d = 1; d <= 15; d += 2)
    for (const auto& q : solve_three_d2(d)) quads.push_back(q);
  std::mt19937_64 rng(20071223);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& quad = quads[rng() % quads.size()];
    const Int k = 1 + static_cast<Int>(rng() % 30);
    const auto pairs = omega(k);
    const auto& mn = pairs[rng() % pairs.size()];
    const auto out = complete_tetrahedron(quad, coeff_matrix(quad), mn.m, mn.n);
    EXPECT_EQ(out.size(), k % 3 == 0 ? 2u : 1u);
    for (const auto& c : out) {
      EXPECT_EQ(c.tetra.side_sq, 2 * quad.d * quad.d * k * k);
    }
  }
}

TEST(Enumerate, PublishedAndOracleCounts) {
  EXPECT_EQ(enumerate_t0(1).count(), 8);
  EXPECT_EQ(enumerate_t0(3).count(), 40);
  EXPECT_EQ(enumerate_t0(2).count(), 8);
  EXPECT_EQ(enumerate_t0(4).count(), 8);
  EXPECT_EQ(enumerate_t0(5).count(), 56);
}

TEST(Enumerate, EllTwoIsScaledEllOne) {
  const auto one = enumerate_t0(1);
  const auto two = enumerate_t0(2);
  std::set<std::array<Vec3, 4>> scaled;
  for (const auto& c : one.tetrahedra) {
    auto v = c.tetra.vertices;
    for (auto& p : v) p = 2 * p;
    scaled.insert(v);
  }
  std::set<std::array<Vec3, 4>> got;
  for (const auto& c : two.tetrahedra) got.insert(c.tetra.vertices);
  EXPECT_EQ(scaled, got);
}

TEST(Enumerate, ClosureProperties) {
  for (Int ell = 1; ell <= 7; ++ell) {
    const auto result = enumerate_t0(ell);
    for (const auto& c : result.tetrahedra) {
      const auto& t = c.tetra;
      EXPECT_EQ(t.vertices[0] <= t.vertices[1], true);
      EXPECT_NE(std::find(t.vertices.begin(), t.vertices.end(), Vec3{}), t.vertices.end());
      EXPECT_EQ(verify_regular(t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]),
                2 * ell * ell);
      const auto normals = face_normals(t);
      EXPECT_TRUE(verify_orthogonality(normals));
      for (const auto& f : normals.faces) {
        EXPECT_EQ(f.d % 2, 1);
        EXPECT_EQ(ell % f.d, 0);
      }
    }
  }
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  const auto one = enumerate_t0(21, 1);
  const auto four = enumerate_t0(21, 4);
  ASSERT_EQ(one.count(), four.count());
  for (std::size_t i = 0; i < one.tetrahedra.size(); ++i) {
    EXPECT_EQ(one.tetrahedra[i].tetra, four.tetrahedra[i].tetra);
    EXPECT_EQ(one.tetrahedra[i].provenance, four.tetrahedra[i].provenance);
  }
}

TEST(FaceNormals, UnitTetrahedron) {
  const auto t = make_tetrahedron({Vec3{0, 0, 0}, {-1, 0, 1}, {-1, 1, 0}, {0, 1, 1}});
  const auto f = face_normals(t);
  std::vector<Vec3> expected{{1, 1, 1}, {-1, 1, -1}, {1, 1, -1}, {-1, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(f.faces[i].d, 1);
    const auto& n = f.faces[i].normal;
    EXPECT_TRUE(std::any_of(expected.begin(), expected.end(),
                            [&](const Vec3& e) { return n == e || n == -e; }));
    // Outward: points away from the opposite vertex.
    const Vec3& on_face = t.vertices[(i + 1) % 4];
    EXPECT_LT(dot(n, t.vertices[i] - on_face), 0);
  }
  EXPECT_TRUE(verify_orthogonality(f));
}

TEST(FaceNormals, WorkedExample) {
  const auto t = make_tetrahedron({Vec3{0, 0, 0}, kA, kB, kC});
  const auto f = face_normals(t);
  const std::vector<std::pair<Vec3, Int>> printed{{{-187, 113, 73}, 133},
                                                  {{-343, -253, -37}, 247},
                                                  {{19, 41, 151}, 91},
                                                  {{391, -2461, 1661}, 1729}};
  for (const auto& [vec, d] : printed) {
    const bool found = std::any_of(f.faces.begin(), f.faces.end(), [&](const FaceNormal& face) {
      return face.d == d && parallel(face.normal, vec) &&
             (face.normal == vec || face.normal == -vec);
    });
    EXPECT_TRUE(found) << to_string(vec);
  }
  EXPECT_TRUE(verify_orthogonality(f));
  EXPECT_EQ(f.ell, 1729);

  // The printed orientations mix inward and outward normals.
  FaceNormalSet as_printed;
  for (int i = 0; i < 4; ++i) as_printed.faces[i] = {printed[i].first, printed[i].second};
  EXPECT_FALSE(verify_orthogonality(as_printed));
  EXPECT_EQ(dot(printed[0].first, printed[1].first) + 133 * 247, 65702);
}

TEST(FaceNormals, NormalsOverDSumToZero) {
  for (Int ell : {1, 3, 7}) {
    for (const auto& c : enumerate_t0(ell).tetrahedra) {
      const auto f = face_normals(c.tetra);
      // sum a_i/d_i = 0 componentwise, checked over a common denominator.
      Int den = 1;
      for (const auto& face : f.faces) den = std::lcm(den, face.d);
      Vec3 sum;
      for (const auto& face : f.faces) sum = sum + (den / face.d) * face.normal;
      EXPECT_TRUE(sum.is_zero());
    }
  }
}

TEST(Orthogonality, PerturbationBreaksIt) {
  const auto t = enumerate_t0(1).tetrahedra.front().tetra;
  auto f = face_normals(t);
  ASSERT_TRUE(verify_orthogonality(f));
  f.faces[2].normal.y += 1;
  EXPECT_FALSE(verify_orthogonality(f));
  f = face_normals(t);
  f.faces[0].d = 0;
  EXPECT_FALSE(verify_orthogonality(f));
}

TEST(Corollary, TrivialPattern) {
  EXPECT_TRUE(satisfies_two_normal_system({3, 3, 3}, {-3, -3, 3}, 3));
  EXPECT_FALSE(satisfies_two_normal_system({3, 3, 3}, {-3, -3, -3}, 3));
}

TEST(Corollary, Constructed) {
  for (Int d = 3; d <= 41; d += 2) {
    const auto sol = corollary_solution(d);
    const Vec3 n1{sol.first.a, sol.first.b, sol.first.c};
    const Vec3 n2{sol.second.a, sol.second.b, sol.second.c};
    EXPECT_TRUE(satisfies_two_normal_system(n1, n2, d)) << d;
    EXPECT_EQ(sol.source.side_sq, 2 * d * d);
    EXPECT_FALSE(std::abs(n1.x) == d && std::abs(n1.y) == d && std::abs(n1.z) == d);
  }
  const auto five = corollary_solution(5);
  std::array<Int, 3> abs{std::abs(five.first.a), std::abs(five.first.b), std::abs(five.first.c)};
  std::sort(abs.begin(), abs.end());
  EXPECT_EQ(abs, (std::array<Int, 3>{1, 5, 7}));
  EXPECT_THROW(corollary_solution(1), Error);
  EXPECT_THROW(corollary_solution(4), Error);
}

// Tiles of the plane tiling spanned by the unit generators, walked along a
// row: consecutive tiles share an edge and alternate sides.
TEST(Tessellation, ConsecutiveTilesAlternateSides) {
  const NormalQuadruple quad{1, 1, 1, 1};
  const auto cm = coeff_matrix(quad);
  const Vec3 p = cm.m_uvw();
  const Vec3 q = cm.m_xyz();
  const Vec3 normal{quad.a, quad.b, quad.c};
  auto point = [&](Int i, Int j) { return i * p + j * q; };

  for (Int row = -3; row <= 3; ++row) {
    int previous_side = 0;
    for (Int t = -6; t <= 6; ++t) {
      const Int i = t >= 0 ? t / 2 : (t - 1) / 2;
      const bool up = (t - 2 * i) == 0;
      std::array<Vec3, 3> tile = up ? std::array<Vec3, 3>{point(i, row), point(i + 1, row),
                                                          point(i, row + 1)}
                                    : std::array<Vec3, 3>{point(i + 1, row), point(i, row + 1),
                                                          point(i + 1, row + 1)};
      const Vec3 sum = tile[0] + tile[1] + tile[2];
      int integral = 0;
      int side = 0;
      for (Int sign : {1, -1}) {
        const Vec3 num = sum + (2 * sign) * normal;
        if (num.x % 3 || num.y % 3 || num.z % 3) continue;
        const Vec3 r{num.x / 3, num.y / 3, num.z / 3};
        EXPECT_EQ(verify_regular(tile[0], tile[1], tile[2], r), 2);
        ++integral;
        side = dot(r - tile[0], normal) > 0 ? 1 : -1;
      }
      EXPECT_EQ(integral, 1);
      if (previous_side != 0) EXPECT_EQ(side, -previous_side) << "row " << row << " tile " << t;
      previous_side = side;
    }
  }
}

}  // namespace
}  // namespace ltet
