#include "ltet/triangle.hpp"

#include <string>

#include "ltet/eisenstein.hpp"

namespace ltet {
namespace {

std::string describe(const NormalQuadruple& quad) {
  return "(" + std::to_string(quad.a) + "," + std::to_string(quad.b) + "," +
         std::to_string(quad.c) + "," + std::to_string(quad.d) + ")";
}

}  // namespace

std::optional<CoeffMatrix> try_coeff_matrix(const NormalQuadruple& quad,
                                            const RSPair& rs) {
  using namespace checked;
  const Int a = quad.a, b = quad.b, c = quad.c, d = quad.d;
  const Int r = rs.r, s = rs.s;
  const Int q = quad.q();
  const Int q2 = mul(2, q);
  const Int db = mul(d, b), da = mul(d, a), ac = mul(a, c), bc = mul(b, c);
  const Int r3ps = add(mul(3, r), s);   // 3r + s
  const Int sm3r = sub(s, mul(3, r));   // s - 3r
  const Int rms = sub(r, s), rps = add(r, s);

  CoeffMatrix cm{quad, rs};
  bool ok = div_exact(neg(add(mul(db, r3ps), mul(ac, rms))), q2, cm.mx) &&
            div_exact(neg(add(mul(r, ac), mul(db, s))), q, cm.nx) &&
            div_exact(sub(mul(da, r3ps), mul(bc, rms)), q2, cm.my) &&
            div_exact(sub(mul(da, s), mul(bc, r)), q, cm.ny) &&
            div_exact(rms, 2, cm.mz) &&
            div_exact(neg(add(mul(r, ac), mul(db, s))), q, cm.mu) &&
            div_exact(neg(add(mul(db, sm3r), mul(ac, rps))), q2, cm.nu) &&
            div_exact(sub(mul(da, s), mul(r, bc)), q, cm.mv) &&
            div_exact(sub(mul(da, sm3r), mul(bc, rps)), q2, cm.nv) &&
            div_exact(rps, 2, cm.nw);
  if (!ok) return std::nullopt;
  cm.nz = r;
  cm.mw = r;
  return cm;
}

CoeffMatrix coeff_matrix(const NormalQuadruple& quad) {
  validate(quad);
  for (const auto& rs : solve_two_q(quad.q())) {
    if (auto cm = try_coeff_matrix(quad, rs)) return *cm;
  }
  fail(ErrorKind::kConstruction,
       "no (r,s) with 2q = s^2 + 3r^2 gives integral coefficients for quadruple " +
           describe(quad));
}

CoeffMatrix coeff_matrix(const NormalQuadruple& quad, const RSPair& rs) {
  validate(quad);
  const Int q = quad.q();
  if (checked::add(checked::sq(rs.s), checked::mul(3, checked::sq(rs.r))) !=
      checked::mul(2, q)) {
    fail(ErrorKind::kConstruction, "(r,s) = (" + std::to_string(rs.r) + "," +
                                       std::to_string(rs.s) + ") does not solve 2q = s^2 + 3r^2");
  }
  auto cm = try_coeff_matrix(quad, RSPair{rs.r, rs.s, q});
  if (!cm) {
    fail(ErrorKind::kConstruction, "(r,s) = (" + std::to_string(rs.r) + "," +
                                       std::to_string(rs.s) +
                                       ") leaves a non-integral coefficient for " +
                                       describe(quad));
  }
  return *cm;
}

LatticeTriangle triangle_points(const CoeffMatrix& cm, Int m, Int n) {
  if (m == 0 && n == 0) fail(ErrorKind::kDegenerate, "triangle_points: (m,n) = (0,0)");
  LatticeTriangle t;
  t.p = m * cm.m_uvw() - n * cm.n_uvw();
  t.q = m * cm.m_xyz() - n * cm.n_xyz();
  t.side_sq = verify_equilateral(t.p, t.q);
  if (t.side_sq != checked::mul(2, checked::sq(cm.quad.d), zeta(m, n))) {
    fail(ErrorKind::kInternal, "triangle side does not equal 2 d^2 zeta(m,n)");
  }
  return t;
}

Int verify_equilateral(const Vec3& p, const Vec3& q) {
  const Int op = norm_sq(p);
  const Int oq = norm_sq(q);
  const Int pq = dist_sq(p, q);
  if (op == 0 || oq == 0 || pq == 0) {
    fail(ErrorKind::kVerification, "degenerate triangle: repeated vertex among O, " +
                                       to_string(p) + ", " + to_string(q));
  }
  if (op != oq) {
    fail(ErrorKind::kVerification, "|P|^2 = " + std::to_string(op) + " but |Q|^2 = " +
                                       std::to_string(oq));
  }
  if (op != pq) {
    fail(ErrorKind::kVerification, "|P-Q|^2 = " + std::to_string(pq) + " but |P|^2 = " +
                                       std::to_string(op));
  }
  return op;
}

}  // namespace ltet
