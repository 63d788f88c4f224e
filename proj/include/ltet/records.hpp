#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ltet/eisenstein.hpp"
#include "ltet/oracle.hpp"
#include "ltet/tetra.hpp"

namespace ltet {

enum class RecordKind {
  kQuadruple,
  kEisensteinPair,
  kEisensteinTriple,
  kTriangle,
  kTetrahedron,
  kNormalSet,
  kCount,
  kDiff,
};

const char* to_string(RecordKind kind) noexcept;
RecordKind record_kind_from(std::string_view name);

// One line of CLI output. The body always starts with "kind"; field order is
// fixed by the builders below so output is byte-stable.
struct Record {
  RecordKind kind;
  nlohmann::ordered_json body;

  std::string to_json_line() const;
  // Flat form; only count records have one, everything else falls back to
  // the JSON line.
  std::string to_csv_line() const;
};

inline constexpr std::string_view kCsvCountHeader = "kind,subject,param,param_value,value";

Record quadruple_record(const NormalQuadruple& quad);
Record pair_record(const EisensteinPair& p, Int k);
Record triple_record(const EisensteinTriple& t);
Record triangle_record(const LatticeTriangle& t, const CoeffMatrix& cm, Int m, Int n);
Record tetrahedron_record(const LatticeTetrahedron& t, const Provenance* provenance);
Record normal_set_record(const FaceNormalSet& f);
Record count_record(std::string_view subject, std::string_view param, Int param_value,
                    Int value);
Record diff_record(std::string_view subject, const oracle::CompareReport& report);
Record bfile_diff_record(std::string_view subject,
                         const std::vector<oracle::OffsetReport>& reports);

/// Parses one JSON line; throws kParse on malformed input.
Record parse_record(std::string_view line);

/// Vertices of a tetrahedron record.
std::array<Vec3, 4> tetrahedron_vertices(const Record& r);

/// Re-verifies a record against its own geometry: tetrahedra through
/// verify_regular, triangles through verify_equilateral, quadruples through
/// validate, normal sets through verify_orthogonality. Returns the squared
/// side for shapes and 0 for the rest; throws on failure.
Int reverify(const Record& r);

}  // namespace ltet
