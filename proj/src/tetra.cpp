#include "ltet/tetra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ltet/eisenstein.hpp"
#include "ltet/parallel.hpp"

namespace ltet {
namespace {

// Exact rational over 128-bit integers, always normalized with den > 0.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  Rational(__int128 n = 0, __int128 d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    __int128 g = gcd128(x.den, y.den);
    return {x.num * (y.den / g) + y.num * (x.den / g), x.den / g * y.den};
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {x.num * y.num, x.den * y.den};
  }
  bool is(__int128 v) const { return den == 1 && num == v; }
};

std::string pair_name(int i, int j) {
  return "p" + std::to_string(i) + "-p" + std::to_string(j);
}

}  // namespace

Int verify_regular(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  const std::array<const Vec3*, 4> pts{&p0, &p1, &p2, &p3};
  Int side = -1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Int dd = dist_sq(*pts[i], *pts[j]);
      if (dd == 0) {
        fail(ErrorKind::kVerification, "degenerate tetrahedron: " + pair_name(i, j) +
                                           " coincide at " + to_string(*pts[i]));
      }
      if (side < 0) {
        side = dd;
      } else if (dd != side) {
        fail(ErrorKind::kVerification, "|" + pair_name(i, j) + "|^2 = " +
                                           std::to_string(dd) + " but |p0-p1|^2 = " +
                                           std::to_string(side));
      }
    }
  }
  return side;
}

LatticeTetrahedron make_tetrahedron(const std::array<Vec3, 4>& pts) {
  LatticeTetrahedron t;
  t.vertices = pts;
  std::sort(t.vertices.begin(), t.vertices.end());
  t.side_sq = verify_regular(t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]);
  if (t.side_sq % 2 != 0 || !is_square(t.side_sq / 2, &t.ell)) {
    fail(ErrorKind::kInternal, "regular lattice tetrahedron with side_sq " +
                                   std::to_string(t.side_sq) + " not of the form 2 l^2");
  }
  return t;
}

std::vector<Completion> complete_tetrahedron(const NormalQuadruple& quad,
                                             const CoeffMatrix& cm, Int m, Int n) {
  if (!(cm.quad == quad)) {
    fail(ErrorKind::kPrecondition, "coefficient matrix was built for another quadruple");
  }
  if (m == 0 && n == 0) fail(ErrorKind::kDegenerate, "complete_tetrahedron: (m,n) = (0,0)");
  const Int z = zeta(m, n);
  Int k;
  if (!is_square(z, &k)) {
    fail(ErrorKind::kPrecondition, "zeta(" + std::to_string(m) + "," + std::to_string(n) +
                                       ") = " + std::to_string(z) +
                                       " is not a perfect square");
  }
  const LatticeTriangle tri = triangle_points(cm, m, n);
  const Vec3 base = tri.p + tri.q;
  const Vec3 normal{quad.a, quad.b, quad.c};
  const Int expected_side = checked::mul(2, checked::sq(quad.d), checked::sq(k));

  std::vector<Completion> out;
  for (int sign : {+1, -1}) {
    const Vec3 num = base + checked::mul(sign, checked::mul(2, k)) * normal;
    Vec3 r;
    if (!checked::div_exact(num.x, 3, r.x) || !checked::div_exact(num.y, 3, r.y) ||
        !checked::div_exact(num.z, 3, r.z)) {
      continue;
    }
    Completion c{make_tetrahedron({Vec3{}, tri.p, tri.q, r}), {quad, cm.rs, m, n, sign}};
    if (c.tetra.side_sq != expected_side) {
      fail(ErrorKind::kInternal, "completed tetrahedron has side_sq " +
                                     std::to_string(c.tetra.side_sq) + ", expected " +
                                     std::to_string(expected_side));
    }
    out.push_back(std::move(c));
  }
  return out;
}

EnumerationResult enumerate_t0(Int ell, unsigned threads) {
  if (ell < 1) fail(ErrorKind::kRange, "enumerate_t0: ell must be positive");

  struct Item {
    NormalQuadruple oriented;
    const std::vector<EisensteinPair>* pairs;
  };
  std::map<Int, std::vector<EisensteinPair>> omegas;
  std::vector<Item> items;
  for (Int d : odd_divisors(ell)) {
    auto& pairs = omegas[d] = omega(ell / d);
    for (const auto& quad : solve_three_d2(d)) {
      items.push_back({quad, &pairs});
      items.push_back({quad.negated(), &pairs});
    }
  }

  std::vector<std::vector<Completion>> partial(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const auto& item = items[i];
    const CoeffMatrix cm = coeff_matrix(item.oriented);
    for (const auto& mn : *item.pairs) {
      for (auto& c : complete_tetrahedron(item.oriented, cm, mn.m, mn.n)) {
        partial[i].push_back(std::move(c));
      }
    }
  });

  // Merge in item order; the first generator of each vertex set wins.
  std::map<std::array<Vec3, 4>, Completion> merged;
  for (auto& part : partial) {
    for (auto& c : part) merged.try_emplace(c.tetra.vertices, std::move(c));
  }
  EnumerationResult result;
  result.tetrahedra.reserve(merged.size());
  for (auto& [key, c] : merged) result.tetrahedra.push_back(std::move(c));
  return result;
}

FaceNormalSet face_normals(const LatticeTetrahedron& t) {
  FaceNormalSet out;
  out.ell = t.ell;
  for (int i = 0; i < 4; ++i) {
    std::array<Vec3, 3> face;
    for (int j = 0, f = 0; j < 4; ++j) {
      if (j != i) face[f++] = t.vertices[j];
    }
    Vec3 n = cross(face[1] - face[0], face[2] - face[0]);
    const Int g = gcd(gcd(n.x, n.y), n.z);
    if (g == 0) fail(ErrorKind::kInternal, "face_normals: degenerate face");
    n = Vec3{n.x / g, n.y / g, n.z / g};
    if (dot(n, t.vertices[i] - face[0]) > 0) n = -n;
    const Int len = norm_sq(n);
    Int d;
    if (len % 3 != 0 || !is_square(len / 3, &d)) {
      fail(ErrorKind::kInternal, "face normal " + to_string(n) + " has |n|^2 != 3d^2");
    }
    out.faces[i] = {n, d};
  }
  return out;
}

bool verify_orthogonality(const FaceNormalSet& f) {
  // Row i of the matrix is (a_i, b_i, c_i, d_i) / (2 d_i).
  std::array<std::array<Rational, 4>, 4> mt;
  for (int i = 0; i < 4; ++i) {
    const auto& face = f.faces[i];
    if (face.d <= 0) return false;
    const std::array<Int, 4> row{face.normal.x, face.normal.y, face.normal.z, face.d};
    for (int j = 0; j < 4; ++j) mt[i][j] = Rational(row[j], 2 * static_cast<__int128>(face.d));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rational rows, cols;
      for (int k = 0; k < 4; ++k) {
        rows = rows + mt[i][k] * mt[j][k];
        cols = cols + mt[k][i] * mt[k][j];
      }
      const int want = i == j ? 1 : 0;
      if (!rows.is(want) || !cols.is(want)) return false;
    }
  }
  return true;
}

bool satisfies_two_normal_system(const Vec3& n1, const Vec3& n2, Int d) {
  const Int three_d2 = checked::mul(3, checked::sq(d));
  return norm_sq(n1) == three_d2 && norm_sq(n2) == three_d2 &&
         dot(n1, n2) == checked::neg(checked::sq(d));
}

CorollaryPair corollary_solution(Int d) {
  if (d <= 1 || d % 2 == 0) {
    fail(ErrorKind::kDomain, "corollary_solution: d must be an odd integer > 1, got " +
                                 std::to_string(d));
  }
  for (const auto& quad : solve_three_d2(d)) {
    const CoeffMatrix cm = coeff_matrix(quad);
    const auto completions = complete_tetrahedron(quad, cm, 1, 1);
    if (completions.empty()) {
      fail(ErrorKind::kInternal, "m = n = 1 triangle has no integral completion");
    }
    const LatticeTetrahedron& t = completions.front().tetra;
    const FaceNormalSet normals = face_normals(t);

    // The base face O,P,Q is the one whose normal has d_i = d and is parallel
    // to (a,b,c); any other face is adjacent to it.
    int base = -1;
    const Vec3 abc{quad.a, quad.b, quad.c};
    for (int i = 0; i < 4; ++i) {
      const auto& n = normals.faces[i].normal;
      if (n == abc || n == -abc) {
        base = i;
        break;
      }
    }
    if (base < 0) fail(ErrorKind::kInternal, "base face normal not found");
    const FaceNormal& first = normals.faces[base];
    const FaceNormal& other = normals.faces[base == 0 ? 1 : 0];
    if (d % other.d != 0) {
      fail(ErrorKind::kInternal, "adjacent face d = " + std::to_string(other.d) +
                                     " does not divide " + std::to_string(d));
    }
    const Vec3 scaled = (d / other.d) * other.normal;
    if (!satisfies_two_normal_system(first.normal, scaled, d)) {
      fail(ErrorKind::kInternal, "constructed pair fails the two-normal system for d = " +
                                     std::to_string(d));
    }
    auto trivial = [d](const Vec3& v) {
      return checked::abs(v.x) == d && checked::abs(v.y) == d && checked::abs(v.z) == d;
    };
    if (trivial(first.normal) && trivial(scaled)) continue;
    return {{first.normal.x, first.normal.y, first.normal.z, d},
            {scaled.x, scaled.y, scaled.z, d},
            t};
  }
  fail(ErrorKind::kInternal, "no nontrivial solution constructed for d = " + std::to_string(d));
}

}  // namespace ltet
