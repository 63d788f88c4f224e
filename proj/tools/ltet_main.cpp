// ltet: command-line front end over the C API in ltet/ltet.h.
//
// Exit codes: 0 success, 1 domain/verification failure or nonempty diff,
// 2 usage error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltet/ltet.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int64_t parse_int(const std::string& text, const std::string& what) {
  int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw UsageError(what + ": '" + text + "' is outside the signed 64-bit range");
  }
  if (ec != std::errc() || ptr != last) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
  return v;
}

std::vector<int64_t> parse_list(const std::string& text, std::size_t count,
                                const std::string& what) {
  std::vector<int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw UsageError(what + ": expected " + std::to_string(count) +
                     " comma-separated integers, got " + std::to_string(out.size()));
  }
  return out;
}

unsigned threads_from_env() {
  const char* env = std::getenv("LTET_THREADS");
  if (!env || !*env) return 0;
  const int64_t v = parse_int(env, "LTET_THREADS");
  if (v < 0 || v > 4096) throw UsageError("LTET_THREADS must be in [0, 4096]");
  return static_cast<unsigned>(v);
}

class Printer {
 public:
  explicit Printer(ltet_format format) : format_(format) {}

  // Prints every record and releases the handle. Returns an exit code.
  int emit(ltet_status status, ltet_result* const* handle) {
    ltet_result* result = *handle;
    if (status != LTET_OK) {
      std::cerr << "ltet: " << ltet_status_name(status) << ": " << ltet_last_error() << "\n";
      return status == LTET_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
    }
    for (std::size_t i = 0; i < ltet_result_size(result); ++i) {
      const std::string kind = ltet_result_kind(result, i);
      if (format_ == LTET_FORMAT_CSV && kind == "count" && !header_done_) {
        std::cout << "kind,subject,param,param_value,value\n";
        header_done_ = true;
      }
      std::cout << ltet_result_line(result, i, format_) << "\n";
    }
    ltet_result_free(result);
    return 0;
  }

 private:
  ltet_format format_;
  bool header_done_ = false;
};

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "ltet: i/o error: cannot open " << path << "\n";
    return kExitFailure;
  }
  std::string line;
  int lineno = 0;
  int64_t checked = 0;
  int failures = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int64_t side = 0;
    ltet_status st = ltet_verify_record(line.c_str(), &side);
    if (st != LTET_OK) {
      std::cerr << "ltet: line " << lineno << ": " << ltet_status_name(st) << ": "
                << ltet_last_error() << "\n";
      ++failures;
    }
    ++checked;
  }
  std::cout << "{\"kind\":\"count\",\"subject\":\"verified\",\"param\":\"failures\","
            << "\"param_value\":" << failures << ",\"value\":" << (checked - failures)
            << "}\n";
  return failures == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular tetrahedra and equilateral triangles in the integer lattice"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ltet_version()));

  std::string format = "json";
  app.add_option("--format", format, "Output format; csv applies to count records")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string d_text, k_text, kmax_text, quad_text, m_text, n_text, rs_text, ell_text;
  std::string grid_n_text, shape = "tetra", bfile, file, points_text;
  bool count_only = false;
  bool allow_large = false;

  auto* solve = app.add_subcommand("solve3d2", "Primitive solutions of a^2+b^2+c^2 = 3d^2");
  solve->add_option("--d", d_text, "Odd d >= 1")->required();

  auto* omega = app.add_subcommand("omega", "Pairs (m,n) with m^2-mn+n^2 = k^2");
  omega->add_option("--k", k_text, "k >= 1")->required();

  auto* triples = app.add_subcommand("triples", "Primitive Eisenstein triples with k <= kmax");
  triples->add_option("--kmax", kmax_text)->required();

  auto* triangles = app.add_subcommand("triangles", "Equilateral triangle for (m,n) in a plane");
  auto* complete = app.add_subcommand("complete", "Complete a triangle to regular tetrahedra");
  for (auto* sub : {triangles, complete}) {
    sub->add_option("--quad", quad_text, "a,b,c,d")->required();
    sub->add_option("--m", m_text)->required();
    sub->add_option("--n", n_text)->required();
    sub->add_option("--rs", rs_text, "Explicit r,s instead of the canonical choice");
  }

  auto* enumerate = app.add_subcommand("enumerate-t0", "All tetrahedra of side ell*sqrt(2) at O");
  enumerate->add_option("--ell", ell_text)->required();
  enumerate->add_flag("--count-only", count_only);

  auto* grid = app.add_subcommand("grid-count", "Brute-force counts in {0..n}^3 for 0..N");
  grid->add_option("--n", grid_n_text)->required();
  grid->add_option("--shape", shape)->check(CLI::IsMember({"tetra", "triangle"}));
  grid->add_option("--bfile", bfile, "OEIS b-file to compare against");
  grid->add_flag("--allow-large", allow_large, "Scan beyond the default size guard");

  auto* compare = app.add_subcommand("oracle-compare", "Enumeration vs brute force for T_ell^0");
  compare->add_option("--ell", ell_text)->required();

  auto* normals = app.add_subcommand("normals", "Outward face normals of a tetrahedron");
  normals->add_option("--points", points_text, "12 comma-separated coordinates")->required();

  auto* corollary = app.add_subcommand("corollary", "Two normals with aa'+bb'+cc' = -d^2");
  corollary->add_option("--d", d_text, "Odd d > 1")->required();

  auto* verify = app.add_subcommand("verify", "Re-verify every record in a file");
  verify->add_option("--file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const unsigned threads = threads_from_env();
    Printer out(format == "csv" ? LTET_FORMAT_CSV : LTET_FORMAT_JSON);
    ltet_result* result = nullptr;

    if (*solve) {
      return out.emit(ltet_solve_three_d2(parse_int(d_text, "--d"), &result), &result);
    }
    if (*omega) return out.emit(ltet_omega(parse_int(k_text, "--k"), &result), &result);
    if (*triples) {
      return out.emit(ltet_primitive_triples(parse_int(kmax_text, "--kmax"), &result), &result);
    }
    if (*triangles || *complete) {
      const auto quad = parse_list(quad_text, 4, "--quad");
      std::optional<std::vector<int64_t>> rs;
      if (!rs_text.empty()) rs = parse_list(rs_text, 2, "--rs");
      const int64_t m = parse_int(m_text, "--m");
      const int64_t n = parse_int(n_text, "--n");
      const int64_t* rsp = rs ? rs->data() : nullptr;
      ltet_status st = *triangles ? ltet_triangle(quad.data(), m, n, rsp, &result)
                                  : ltet_complete(quad.data(), m, n, rsp, &result);
      return out.emit(st, &result);
    }
    if (*enumerate) {
      return out.emit(
          ltet_enumerate_t0(parse_int(ell_text, "--ell"), threads, count_only, &result), &result);
    }
    if (*grid) {
      int match = 1;
      ltet_status st = ltet_grid_count(parse_int(grid_n_text, "--n"),
                                       shape == "tetra" ? LTET_SHAPE_TETRA : LTET_SHAPE_TRIANGLE,
                                       threads, allow_large, bfile.empty() ? nullptr : bfile.c_str(),
                                       &result, &match);
      int code = out.emit(st, &result);
      if (code == 0 && !match) {
        std::cerr << "ltet: b-file mismatch under both offset conventions\n";
        return kExitFailure;
      }
      return code;
    }
    if (*compare) {
      int equal = 0;
      ltet_status st = ltet_oracle_compare(parse_int(ell_text, "--ell"), threads, &result, &equal);
      int code = out.emit(st, &result);
      if (code == 0 && !equal) {
        std::cerr << "ltet: parametrized enumeration and brute force disagree\n";
        return kExitFailure;
      }
      return code;
    }
    if (*normals) {
      const auto pts = parse_list(points_text, 12, "--points");
      return out.emit(ltet_face_normals(pts.data(), &result), &result);
    }
    if (*corollary) return out.emit(ltet_corollary(parse_int(d_text, "--d"), &result), &result);
    if (*verify) return run_verify(file);
  } catch (const UsageError& e) {
    std::cerr << "ltet: usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
