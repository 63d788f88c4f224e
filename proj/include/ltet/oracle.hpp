#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltet/tetra.hpp"

namespace ltet::oracle {

// Grid scans refuse n above this unless explicitly overridden.
inline constexpr Int kGridGuard = 6;

struct GridOptions {
  bool allow_large = false;
  bool keep_list = false;
  // Only pair up points whose squared distance is twice a square. Only
  // meaningful for tetrahedra.
  bool prune_side_law = true;
  unsigned threads = 0;
};

struct GridTetraResult {
  Int count = 0;
  std::vector<std::array<Vec3, 4>> list;  // sorted, when requested
};

struct GridTriangleResult {
  Int count = 0;
  std::vector<std::array<Vec3, 3>> list;
};

struct GridCountRecord {
  Int n = 0;
  Int triangles = 0;
  Int tetrahedra = 0;
};

/// Regular tetrahedra with vertices in {0..n}^3, by exhaustive search.
GridTetraResult brute_tetrahedra_grid(Int n, const GridOptions& opts = {});

/// Equilateral triangles with vertices in {0..n}^3, by exhaustive search.
GridTriangleResult brute_triangles_grid(Int n, const GridOptions& opts = {});

/// Regular tetrahedra with a vertex at O and side_sq = 2 ell^2, scanning
/// lattice points of that norm inside [-bound, bound]^3. bound = 0 selects
/// the default 2*ell.
std::vector<LatticeTetrahedron> brute_t0(Int ell, Int bound = 0);

struct CompareReport {
  std::vector<LatticeTetrahedron> missing_from_parametrized;
  std::vector<LatticeTetrahedron> extra_in_parametrized;
  bool empty() const {
    return missing_from_parametrized.empty() && extra_in_parametrized.empty();
  }
};

CompareReport compare(const std::vector<LatticeTetrahedron>& parametrized,
                      const std::vector<LatticeTetrahedron>& brute);

// OEIS b-file: "index value" per line, '#' comments and blank lines ignored.
struct BFileTerm {
  Int index = 0;
  Int value = 0;
};

std::vector<BFileTerm> parse_bfile(const std::string& text);
std::vector<BFileTerm> read_bfile(const std::string& path);

struct OffsetReport {
  int offset = 0;  // b-file index i <-> grid n = i - offset
  Int compared = 0;
  std::vector<Int> mismatched_n;
  bool match() const { return compared > 0 && mismatched_n.empty(); }
};

/// Compares computed grid terms (values[n] for n = 0..) with a b-file under
/// offsets 0 and 1.
std::vector<OffsetReport> compare_bfile(const std::vector<Int>& values,
                                        const std::vector<BFileTerm>& terms);

}  // namespace ltet::oracle
