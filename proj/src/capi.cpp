/* capi.cpp
 *
 * extern "C" wrappers over the C++ core. Exceptions never cross this
 * boundary: each entry point maps ltet::Error kinds onto ltet_status and
 * stores the message in a thread-local buffer.
 */

#include "ltet/ltet.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ltet/eisenstein.hpp"
#include "ltet/oracle.hpp"
#include "ltet/records.hpp"
#include "ltet/tetra.hpp"

struct ltet_result {
  std::vector<ltet::Record> records;
  // Rendered lines are cached so returned pointers stay valid.
  mutable std::vector<std::string> json;
  mutable std::vector<std::string> csv;
};

namespace {

thread_local std::string g_last_error;

ltet_status to_status(ltet::ErrorKind kind) {
  using ltet::ErrorKind;
  switch (kind) {
    case ErrorKind::kRange: return LTET_ERR_RANGE;
    case ErrorKind::kDomain: return LTET_ERR_DOMAIN;
    case ErrorKind::kOverflow: return LTET_ERR_OVERFLOW;
    case ErrorKind::kConstruction: return LTET_ERR_CONSTRUCTION;
    case ErrorKind::kVerification: return LTET_ERR_VERIFICATION;
    case ErrorKind::kPrecondition: return LTET_ERR_PRECONDITION;
    case ErrorKind::kDegenerate: return LTET_ERR_DEGENERATE;
    case ErrorKind::kRefused: return LTET_ERR_REFUSED;
    case ErrorKind::kParse: return LTET_ERR_PARSE;
    case ErrorKind::kIo: return LTET_ERR_IO;
    case ErrorKind::kInternal: return LTET_ERR_INTERNAL;
  }
  return LTET_ERR_INTERNAL;
}

template <typename Fn>
ltet_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return LTET_OK;
  } catch (const ltet::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LTET_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LTET_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return LTET_ERR_INTERNAL;
  }
}

ltet_status invalid(const char* what) {
  g_last_error = what;
  return LTET_ERR_INVALID_ARGUMENT;
}

ltet::Vec3 vec(const int64_t* p) { return {p[0], p[1], p[2]}; }

ltet::NormalQuadruple quad_from(const int64_t q[4]) { return {q[0], q[1], q[2], q[3]}; }

ltet::CoeffMatrix matrix_for(const int64_t quad[4], const int64_t* rs) {
  const auto nq = quad_from(quad);
  return rs ? ltet::coeff_matrix(nq, ltet::RSPair{rs[0], rs[1], 0}) : ltet::coeff_matrix(nq);
}

template <typename Fill>
ltet_status produce(ltet_result** out, Fill&& fill) {
  if (!out) return invalid("output handle pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    auto result = std::make_unique<ltet_result>();
    fill(result->records);
    *out = result.release();
  });
}

}  // namespace

extern "C" {

const char* ltet_version(void) { return "1.0.0"; }

const char* ltet_status_name(ltet_status status) {
  switch (status) {
    case LTET_OK: return "ok";
    case LTET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LTET_ERR_RANGE: return "range error";
    case LTET_ERR_DOMAIN: return "domain error";
    case LTET_ERR_OVERFLOW: return "overflow";
    case LTET_ERR_CONSTRUCTION: return "construction error";
    case LTET_ERR_VERIFICATION: return "verification error";
    case LTET_ERR_PRECONDITION: return "precondition error";
    case LTET_ERR_DEGENERATE: return "degenerate input";
    case LTET_ERR_REFUSED: return "refused";
    case LTET_ERR_PARSE: return "parse error";
    case LTET_ERR_IO: return "i/o error";
    case LTET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ltet_last_error(void) { return g_last_error.c_str(); }

ltet_status ltet_zeta(int64_t m, int64_t n, int64_t* out) {
  if (!out) return invalid("out is NULL");
  return guarded([&] { *out = ltet::zeta(m, n); });
}

ltet_status ltet_is_loeschian(int64_t t, int* out) {
  if (!out) return invalid("out is NULL");
  return guarded([&] { *out = ltet::is_loeschian(t) ? 1 : 0; });
}

ltet_status ltet_count_representations(int64_t k, int64_t* out) {
  if (!out) return invalid("out is NULL");
  return guarded([&] { *out = ltet::count_representations(k); });
}

ltet_status ltet_verify_equilateral(const int64_t p[3], const int64_t q[3], int64_t* side_sq) {
  if (!p || !q || !side_sq) return invalid("NULL argument");
  return guarded([&] { *side_sq = ltet::verify_equilateral(vec(p), vec(q)); });
}

ltet_status ltet_verify_regular(const int64_t points[12], int64_t* side_sq) {
  if (!points || !side_sq) return invalid("NULL argument");
  return guarded([&] {
    *side_sq = ltet::verify_regular(vec(points), vec(points + 3), vec(points + 6),
                                    vec(points + 9));
  });
}

ltet_status ltet_solve_three_d2(int64_t d, ltet_result** out) {
  return produce(out, [&](auto& recs) {
    for (const auto& q : ltet::solve_three_d2(d)) recs.push_back(ltet::quadruple_record(q));
  });
}

ltet_status ltet_omega(int64_t k, ltet_result** out) {
  return produce(out, [&](auto& recs) {
    const auto pairs = ltet::omega(k);
    for (const auto& p : pairs) recs.push_back(ltet::pair_record(p, k));
    recs.push_back(ltet::count_record("omega", "k", k, static_cast<ltet::Int>(pairs.size())));
  });
}

ltet_status ltet_primitive_triples(int64_t kmax, ltet_result** out) {
  return produce(out, [&](auto& recs) {
    const auto triples = ltet::primitive_triples(kmax);
    for (const auto& t : triples) recs.push_back(ltet::triple_record(t));
    recs.push_back(
        ltet::count_record("triples", "kmax", kmax, static_cast<ltet::Int>(triples.size())));
  });
}

ltet_status ltet_triangle(const int64_t quad[4], int64_t m, int64_t n, const int64_t* rs,
                          ltet_result** out) {
  if (!quad) return invalid("quad is NULL");
  return produce(out, [&](auto& recs) {
    const auto cm = matrix_for(quad, rs);
    recs.push_back(ltet::triangle_record(ltet::triangle_points(cm, m, n), cm, m, n));
  });
}

ltet_status ltet_complete(const int64_t quad[4], int64_t m, int64_t n, const int64_t* rs,
                          ltet_result** out) {
  if (!quad) return invalid("quad is NULL");
  return produce(out, [&](auto& recs) {
    const auto cm = matrix_for(quad, rs);
    const auto completions = ltet::complete_tetrahedron(quad_from(quad), cm, m, n);
    for (const auto& c : completions) {
      recs.push_back(ltet::tetrahedron_record(c.tetra, &c.provenance));
      recs.push_back(ltet::normal_set_record(ltet::face_normals(c.tetra)));
    }
  });
}

ltet_status ltet_enumerate_t0(int64_t ell, unsigned threads, int count_only,
                              ltet_result** out) {
  return produce(out, [&](auto& recs) {
    const auto result = ltet::enumerate_t0(ell, threads);
    if (!count_only) {
      for (const auto& c : result.tetrahedra) {
        recs.push_back(ltet::tetrahedron_record(c.tetra, &c.provenance));
      }
    }
    recs.push_back(ltet::count_record("TO", "ell", ell, result.count()));
  });
}

ltet_status ltet_face_normals(const int64_t points[12], ltet_result** out) {
  if (!points) return invalid("points is NULL");
  return produce(out, [&](auto& recs) {
    const auto t = ltet::make_tetrahedron(
        {vec(points), vec(points + 3), vec(points + 6), vec(points + 9)});
    recs.push_back(ltet::normal_set_record(ltet::face_normals(t)));
  });
}

ltet_status ltet_corollary(int64_t d, ltet_result** out) {
  return produce(out, [&](auto& recs) {
    const auto sol = ltet::corollary_solution(d);
    recs.push_back(ltet::quadruple_record(sol.first));
    recs.push_back(ltet::quadruple_record(sol.second));
    recs.push_back(ltet::tetrahedron_record(sol.source, nullptr));
  });
}

ltet_status ltet_grid_count(int64_t n, ltet_shape shape, unsigned threads, int allow_large,
                            const char* bfile_path, ltet_result** out, int* bfile_match) {
  if (shape != LTET_SHAPE_TETRA && shape != LTET_SHAPE_TRIANGLE) return invalid("bad shape");
  if (bfile_match) *bfile_match = 1;
  return produce(out, [&](auto& recs) {
    ltet::oracle::GridOptions opts;
    opts.allow_large = allow_large != 0;
    opts.threads = threads;
    if (n > ltet::oracle::kGridGuard && !opts.allow_large) {
      // Refuse before doing any of the smaller scans.
      ltet::oracle::brute_tetrahedra_grid(n, opts);
    }
    const char* subject = shape == LTET_SHAPE_TETRA ? "grid-tetra" : "grid-triangle";
    std::vector<ltet::Int> values;
    for (int64_t i = 0; i <= n; ++i) {
      const ltet::Int v = shape == LTET_SHAPE_TETRA
                              ? ltet::oracle::brute_tetrahedra_grid(i, opts).count
                              : ltet::oracle::brute_triangles_grid(i, opts).count;
      values.push_back(v);
      recs.push_back(ltet::count_record(subject, "n", i, v));
    }
    if (bfile_path) {
      const auto reports =
          ltet::oracle::compare_bfile(values, ltet::oracle::read_bfile(bfile_path));
      auto rec = ltet::bfile_diff_record(std::string(subject) + "-bfile", reports);
      if (bfile_match) *bfile_match = rec.body["equal"].template get<bool>() ? 1 : 0;
      recs.push_back(std::move(rec));
    }
  });
}

ltet_status ltet_oracle_compare(int64_t ell, unsigned threads, ltet_result** out, int* equal) {
  if (equal) *equal = 0;
  return produce(out, [&](auto& recs) {
    std::vector<ltet::LatticeTetrahedron> param;
    for (const auto& c : ltet::enumerate_t0(ell, threads).tetrahedra) param.push_back(c.tetra);
    const auto report = ltet::oracle::compare(param, ltet::oracle::brute_t0(ell));
    if (equal) *equal = report.empty() ? 1 : 0;
    recs.push_back(ltet::diff_record("T0 ell=" + std::to_string(ell), report));
  });
}

ltet_status ltet_verify_record(const char* line, int64_t* side_sq) {
  if (!line || !side_sq) return invalid("NULL argument");
  return guarded([&] { *side_sq = ltet::reverify(ltet::parse_record(line)); });
}

size_t ltet_result_size(const ltet_result* result) {
  return result ? result->records.size() : 0;
}

const char* ltet_result_line(const ltet_result* result, size_t index, ltet_format format) {
  if (!result || index >= result->records.size()) return nullptr;
  auto& cache = format == LTET_FORMAT_CSV ? result->csv : result->json;
  if (cache.empty()) {
    cache.reserve(result->records.size());
    for (const auto& r : result->records) {
      cache.push_back(format == LTET_FORMAT_CSV ? r.to_csv_line() : r.to_json_line());
    }
  }
  return cache[index].c_str();
}

const char* ltet_result_kind(const ltet_result* result, size_t index) {
  if (!result || index >= result->records.size()) return nullptr;
  return ltet::to_string(result->records[index].kind);
}

void ltet_result_free(ltet_result* result) { delete result; }

}  // extern "C"
