#pragma once

#include <optional>

#include "ltet/numtheory.hpp"
#include "ltet/vec3.hpp"

namespace ltet {

// Integer basis of the equilateral-triangle lattice in the plane
// a x + b y + c z = 0. Vertex P of the triangle for (m,n) is
// m * m_uvw - n * n_uvw, vertex Q is m * m_xyz - n * n_xyz.
struct CoeffMatrix {
  NormalQuadruple quad;
  RSPair rs;
  Int mx = 0, nx = 0, my = 0, ny = 0, mz = 0, nz = 0;
  Int mu = 0, nu = 0, mv = 0, nv = 0, mw = 0, nw = 0;

  Vec3 m_uvw() const { return {mu, mv, mw}; }
  Vec3 n_uvw() const { return {nu, nv, nw}; }
  Vec3 m_xyz() const { return {mx, my, mz}; }
  Vec3 n_xyz() const { return {nx, ny, nz}; }

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;
};

struct LatticeTriangle {
  Vec3 p;  // the third vertex is always the origin
  Vec3 q;
  Int side_sq = 0;
};

/// The twelve coefficients for one (r,s), or nullopt when some division
/// leaves a remainder.
std::optional<CoeffMatrix> try_coeff_matrix(const NormalQuadruple& quad,
                                            const RSPair& rs);

/// First (r,s) of solve_two_q(quad.q()) giving integral coefficients.
/// Throws kConstruction when none does.
CoeffMatrix coeff_matrix(const NormalQuadruple& quad);

/// Coefficients for a caller-chosen (r,s); throws kConstruction when the pair
/// does not solve s^2 + 3r^2 = 2q or yields a non-integral entry.
CoeffMatrix coeff_matrix(const NormalQuadruple& quad, const RSPair& rs);

LatticeTriangle triangle_points(const CoeffMatrix& cm, Int m, Int n);

/// Common squared side of the triangle O,P,Q; throws kVerification otherwise.
Int verify_equilateral(const Vec3& p, const Vec3& q);

}  // namespace ltet
