/* ltet.h
 *
 * C interface to the lattice tetrahedra library. Every producer returns a
 * status code and hands back an opaque ltet_result holding a list of output
 * records; the caller renders them with ltet_result_line and releases the
 * handle with ltet_result_free. On failure ltet_last_error() describes the
 * problem for the calling thread.
 */

#ifndef LTET_LTET_H_
#define LTET_LTET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LTET_API __declspec(dllexport)
#else
#define LTET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ltet_status {
  LTET_OK = 0,
  LTET_ERR_INVALID_ARGUMENT = 1,
  LTET_ERR_RANGE = 2,
  LTET_ERR_DOMAIN = 3,
  LTET_ERR_OVERFLOW = 4,
  LTET_ERR_CONSTRUCTION = 5,
  LTET_ERR_VERIFICATION = 6,
  LTET_ERR_PRECONDITION = 7,
  LTET_ERR_DEGENERATE = 8,
  LTET_ERR_REFUSED = 9,
  LTET_ERR_PARSE = 10,
  LTET_ERR_IO = 11,
  LTET_ERR_INTERNAL = 12
} ltet_status;

typedef enum ltet_format { LTET_FORMAT_JSON = 0, LTET_FORMAT_CSV = 1 } ltet_format;

typedef enum ltet_shape { LTET_SHAPE_TETRA = 0, LTET_SHAPE_TRIANGLE = 1 } ltet_shape;

typedef struct ltet_result ltet_result;

LTET_API const char* ltet_version(void);
LTET_API const char* ltet_status_name(ltet_status status);
/* Message of the last failure on this thread; empty string if none. */
LTET_API const char* ltet_last_error(void);

/* Scalar operations. */
LTET_API ltet_status ltet_zeta(int64_t m, int64_t n, int64_t* out);
LTET_API ltet_status ltet_is_loeschian(int64_t t, int* out);
LTET_API ltet_status ltet_count_representations(int64_t k, int64_t* out);
LTET_API ltet_status ltet_verify_equilateral(const int64_t p[3], const int64_t q[3],
                                             int64_t* side_sq);
/* points holds four xyz triples. */
LTET_API ltet_status ltet_verify_regular(const int64_t points[12], int64_t* side_sq);

/* Record producers. quad is (a,b,c,d); rs may be NULL to select the
 * canonical (r,s) pair. */
LTET_API ltet_status ltet_solve_three_d2(int64_t d, ltet_result** out);
LTET_API ltet_status ltet_omega(int64_t k, ltet_result** out);
LTET_API ltet_status ltet_primitive_triples(int64_t kmax, ltet_result** out);
LTET_API ltet_status ltet_triangle(const int64_t quad[4], int64_t m, int64_t n,
                                   const int64_t* rs, ltet_result** out);
LTET_API ltet_status ltet_complete(const int64_t quad[4], int64_t m, int64_t n,
                                   const int64_t* rs, ltet_result** out);
LTET_API ltet_status ltet_enumerate_t0(int64_t ell, unsigned threads, int count_only,
                                       ltet_result** out);
LTET_API ltet_status ltet_face_normals(const int64_t points[12], ltet_result** out);
LTET_API ltet_status ltet_corollary(int64_t d, ltet_result** out);

/* Count records for every grid size 0..n. With bfile_path non-NULL a diff
 * record comparing against the b-file follows; *bfile_match is set to 1 when
 * some offset convention matches (or when no b-file was given). */
LTET_API ltet_status ltet_grid_count(int64_t n, ltet_shape shape, unsigned threads,
                                     int allow_large, const char* bfile_path,
                                     ltet_result** out, int* bfile_match);

/* Diff record between enumeration and the brute-force oracle for T_ell^0.
 * *equal is 1 when the diff is empty. */
LTET_API ltet_status ltet_oracle_compare(int64_t ell, unsigned threads, ltet_result** out,
                                         int* equal);

/* Parses one output line and re-verifies its geometry. *side_sq receives the
 * squared side for triangles and tetrahedra, 0 otherwise. */
LTET_API ltet_status ltet_verify_record(const char* line, int64_t* side_sq);

LTET_API size_t ltet_result_size(const ltet_result* result);
/* Borrowed pointer valid until ltet_result_free. NULL if index is out of
 * range. */
LTET_API const char* ltet_result_line(const ltet_result* result, size_t index,
                                      ltet_format format);
LTET_API const char* ltet_result_kind(const ltet_result* result, size_t index);
LTET_API void ltet_result_free(ltet_result* result);

#ifdef __cplusplus
}
#endif

#endif /* LTET_LTET_H_ */
