#pragma once

#include <array>
#include <vector>

#include "ltet/triangle.hpp"

namespace ltet {

// How a tetrahedron was produced by the parametrized pipeline.
struct Provenance {
  NormalQuadruple quad;  // orientation as used, possibly non-canonical
  RSPair rs;
  Int m = 0;
  Int n = 0;
  int sign = 0;  // +1 / -1 choice in the fourth-vertex formula

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct LatticeTetrahedron {
  std::array<Vec3, 4> vertices;  // lexicographically sorted
  Int side_sq = 0;
  Int ell = 0;  // side_sq == 2 ell^2

  friend bool operator==(const LatticeTetrahedron& a, const LatticeTetrahedron& b) {
    return a.vertices == b.vertices;
  }
  friend auto operator<=>(const LatticeTetrahedron& a, const LatticeTetrahedron& b) {
    return a.vertices <=> b.vertices;
  }
};

/// Builds a tetrahedron from four points: sorts the vertices, verifies
/// regularity and the side law side_sq = 2 ell^2.
LatticeTetrahedron make_tetrahedron(const std::array<Vec3, 4>& pts);

/// Common squared side of four points forming a regular tetrahedron.
/// Throws kVerification naming the first failing pair.
Int verify_regular(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3);

struct Completion {
  LatticeTetrahedron tetra;
  Provenance provenance;
};

/// Fourth vertex R = (P + Q +- 2k(a,b,c)) / 3 over the triangle O,P,Q of
/// (m,n). Returns the completions for the signs that make R integral, "+"
/// first. Throws kPrecondition when zeta(m,n) is not a perfect square.
std::vector<Completion> complete_tetrahedron(const NormalQuadruple& quad,
                                             const CoeffMatrix& cm, Int m, Int n);

struct EnumerationResult {
  std::vector<Completion> tetrahedra;  // sorted by vertices, one per set
  Int count() const { return static_cast<Int>(tetrahedra.size()); }
};

/// T_ell^0: every regular tetrahedron with a vertex at the origin and side
/// ell*sqrt(2). threads == 0 uses the hardware concurrency. Output does not
/// depend on the thread count.
EnumerationResult enumerate_t0(Int ell, unsigned threads = 0);

struct FaceNormal {
  Vec3 normal;  // primitive, outward
  Int d = 0;    // |normal|^2 == 3 d^2

  friend bool operator==(const FaceNormal&, const FaceNormal&) = default;
};

struct FaceNormalSet {
  std::array<FaceNormal, 4> faces;  // faces[i] is opposite vertices[i]
  Int ell = 0;
};

FaceNormalSet face_normals(const LatticeTetrahedron& t);

/// Rows (a_i/d_i, b_i/d_i, c_i/d_i, 1)/2 form an orthogonal matrix.
/// Checked in exact rational arithmetic, both M M^t and M^t M.
bool verify_orthogonality(const FaceNormalSet& f);

struct CorollaryPair {
  NormalQuadruple first;   // a^2+b^2+c^2 = 3d^2
  NormalQuadruple second;  // a'^2+b'^2+c'^2 = 3d^2, aa'+bb'+cc' = -d^2
  LatticeTetrahedron source;
};

/// True when the pair solves a^2+b^2+c^2 = a'^2+b'^2+c'^2 = 3d^2 and
/// aa'+bb'+cc' = -d^2.
bool satisfies_two_normal_system(const Vec3& n1, const Vec3& n2, Int d);

/// Constructive solution of the two-normal system for odd d > 1 built from a
/// completed tetrahedron with m = n = 1.
CorollaryPair corollary_solution(Int d);

}  // namespace ltet
