#include "ltet/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "ltet/parallel.hpp"

namespace ltet::oracle {
namespace {

void check_grid(Int n, const GridOptions& opts) {
  if (n < 0) fail(ErrorKind::kRange, "grid size must be nonnegative");
  if (n > kGridGuard && !opts.allow_large) {
    fail(ErrorKind::kRefused, "grid size " + std::to_string(n) + " exceeds the guard " +
                                  std::to_string(kGridGuard) +
                                  "; pass the override to scan anyway");
  }
}

std::vector<Vec3> grid_points(Int n) {
  std::vector<Vec3> pts;
  for (Int x = 0; x <= n; ++x)
    for (Int y = 0; y <= n; ++y)
      for (Int z = 0; z <= n; ++z) pts.push_back({x, y, z});
  return pts;
}

bool side_law(Int dd) { return dd % 2 == 0 && is_square(dd / 2); }

// For each point a, its later neighbours bucketed by squared distance. Every
// shape is discovered once, from its lowest-index vertex.
template <typename Visit>
void scan_buckets(const std::vector<Vec3>& pts, std::size_t a, bool prune, Visit&& visit) {
  std::map<Int, std::vector<std::size_t>> buckets;
  for (std::size_t b = a + 1; b < pts.size(); ++b) {
    const Int dd = dist_sq(pts[a], pts[b]);
    if (prune && !side_law(dd)) continue;
    buckets[dd].push_back(b);
  }
  for (const auto& [dd, group] : buckets) visit(dd, group);
}

}  // namespace

GridTetraResult brute_tetrahedra_grid(Int n, const GridOptions& opts) {
  check_grid(n, opts);
  const auto pts = grid_points(n);
  std::vector<GridTetraResult> partial(pts.size());
  parallel_for(pts.size(), opts.threads, [&](std::size_t a) {
    auto& out = partial[a];
    scan_buckets(pts, a, opts.prune_side_law, [&](Int dd, const std::vector<std::size_t>& g) {
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
          if (dist_sq(pts[g[i]], pts[g[j]]) != dd) continue;
          for (std::size_t k = j + 1; k < g.size(); ++k) {
            const auto& p0 = pts[a];
            const auto& p1 = pts[g[i]];
            const auto& p2 = pts[g[j]];
            const auto& p3 = pts[g[k]];
            try {
              verify_regular(p0, p1, p2, p3);
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::kVerification) continue;
              throw;
            }
            ++out.count;
            if (opts.keep_list) out.list.push_back({p0, p1, p2, p3});
          }
        }
    });
  });
  GridTetraResult total;
  for (auto& p : partial) {
    total.count += p.count;
    total.list.insert(total.list.end(), p.list.begin(), p.list.end());
  }
  std::sort(total.list.begin(), total.list.end());
  return total;
}

GridTriangleResult brute_triangles_grid(Int n, const GridOptions& opts) {
  check_grid(n, opts);
  const auto pts = grid_points(n);
  std::vector<GridTriangleResult> partial(pts.size());
  parallel_for(pts.size(), opts.threads, [&](std::size_t a) {
    auto& out = partial[a];
    scan_buckets(pts, a, false, [&](Int, const std::vector<std::size_t>& g) {
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
          const Vec3& o = pts[a];
          const Vec3& p = pts[g[i]];
          const Vec3& q = pts[g[j]];
          try {
            verify_equilateral(p - o, q - o);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::kVerification) continue;
            throw;
          }
          ++out.count;
          if (opts.keep_list) out.list.push_back({o, p, q});
        }
    });
  });
  GridTriangleResult total;
  for (auto& p : partial) {
    total.count += p.count;
    total.list.insert(total.list.end(), p.list.begin(), p.list.end());
  }
  std::sort(total.list.begin(), total.list.end());
  return total;
}

std::vector<LatticeTetrahedron> brute_t0(Int ell, Int bound) {
  if (ell < 1) fail(ErrorKind::kRange, "brute_t0: ell must be positive");
  if (bound == 0) bound = checked::mul(2, ell);
  if (bound < checked::mul(2, ell)) {
    fail(ErrorKind::kPrecondition, "brute_t0: bound must be at least 2*ell");
  }
  const Int side = checked::mul(2, checked::sq(ell));
  std::vector<Vec3> shell;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y) {
      Int z;
      if (!is_square(side - x * x - y * y, &z) || z > bound) continue;
      shell.push_back({x, y, -z});
      if (z != 0) shell.push_back({x, y, z});
    }
  std::sort(shell.begin(), shell.end());

  const std::size_t count = shell.size();
  std::vector<std::vector<std::size_t>> adj(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (dist_sq(shell[i], shell[j]) == side) adj[i].push_back(j);

  std::vector<LatticeTetrahedron> out;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t a = 0; a < adj[i].size(); ++a)
      for (std::size_t b = a + 1; b < adj[i].size(); ++b) {
        const Vec3& p = shell[i];
        const Vec3& q = shell[adj[i][a]];
        const Vec3& r = shell[adj[i][b]];
        if (dist_sq(q, r) != side) continue;
        LatticeTetrahedron t;
        t.vertices = {Vec3{}, p, q, r};
        std::sort(t.vertices.begin(), t.vertices.end());
        t.side_sq = verify_regular(t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]);
        t.ell = ell;
        out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompareReport compare(const std::vector<LatticeTetrahedron>& parametrized,
                      const std::vector<LatticeTetrahedron>& brute) {
  auto sorted = [](std::vector<LatticeTetrahedron> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto p = sorted(parametrized);
  const auto b = sorted(brute);
  CompareReport report;
  std::set_difference(b.begin(), b.end(), p.begin(), p.end(),
                      std::back_inserter(report.missing_from_parametrized));
  std::set_difference(p.begin(), p.end(), b.begin(), b.end(),
                      std::back_inserter(report.extra_in_parametrized));
  return report;
}

std::vector<BFileTerm> parse_bfile(const std::string& text) {
  std::vector<BFileTerm> terms;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    BFileTerm t;
    if (!(fields >> t.index)) {
      std::string rest;
      if (std::istringstream(line) >> rest) {
        fail(ErrorKind::kParse, "b-file line " + std::to_string(lineno) + ": expected 'n a(n)'");
      }
      continue;
    }
    std::string extra;
    if (!(fields >> t.value) || (fields >> extra)) {
      fail(ErrorKind::kParse, "b-file line " + std::to_string(lineno) + ": expected 'n a(n)'");
    }
    terms.push_back(t);
  }
  return terms;
}

std::vector<BFileTerm> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open b-file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str());
}

std::vector<OffsetReport> compare_bfile(const std::vector<Int>& values,
                                        const std::vector<BFileTerm>& terms) {
  std::vector<OffsetReport> reports;
  for (int offset : {0, 1}) {
    OffsetReport r;
    r.offset = offset;
    for (const auto& t : terms) {
      const Int n = t.index - offset;
      if (n < 0 || n >= static_cast<Int>(values.size())) continue;
      ++r.compared;
      if (values[n] != t.value) r.mismatched_n.push_back(n);
    }
    reports.push_back(r);
  }
  return reports;
}

}  // namespace ltet::oracle
