#include "ltet/records.hpp"

#include <string>

namespace ltet {
namespace {

using nlohmann::ordered_json;

ordered_json point(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json quad_array(const NormalQuadruple& q) {
  return ordered_json::array({q.a, q.b, q.c, q.d});
}

ordered_json tetra_array(const LatticeTetrahedron& t) {
  ordered_json vs = ordered_json::array();
  for (const auto& v : t.vertices) vs.push_back(point(v));
  return vs;
}

Record start(RecordKind kind) {
  Record r{kind, ordered_json::object()};
  r.body["kind"] = to_string(kind);
  return r;
}

Vec3 read_point(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::kParse, "expected [x,y,z]");
  return {j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>()};
}

NormalQuadruple read_quad(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 4) fail(ErrorKind::kParse, "expected [a,b,c,d]");
  return {j.at(0).get<Int>(), j.at(1).get<Int>(), j.at(2).get<Int>(), j.at(3).get<Int>()};
}

}  // namespace

const char* to_string(RecordKind kind) noexcept {
  switch (kind) {
    case RecordKind::kQuadruple: return "quadruple";
    case RecordKind::kEisensteinPair: return "eisenstein-pair";
    case RecordKind::kEisensteinTriple: return "eisenstein-triple";
    case RecordKind::kTriangle: return "triangle";
    case RecordKind::kTetrahedron: return "tetrahedron";
    case RecordKind::kNormalSet: return "normal-set";
    case RecordKind::kCount: return "count";
    case RecordKind::kDiff: return "diff";
  }
  return "unknown";
}

RecordKind record_kind_from(std::string_view name) {
  for (auto k : {RecordKind::kQuadruple, RecordKind::kEisensteinPair,
                 RecordKind::kEisensteinTriple, RecordKind::kTriangle,
                 RecordKind::kTetrahedron, RecordKind::kNormalSet, RecordKind::kCount,
                 RecordKind::kDiff}) {
    if (name == to_string(k)) return k;
  }
  fail(ErrorKind::kParse, "unknown record kind '" + std::string(name) + "'");
}

std::string Record::to_json_line() const { return body.dump(); }

std::string Record::to_csv_line() const {
  if (kind != RecordKind::kCount) return to_json_line();
  return std::string("count,") + body.at("subject").get<std::string>() + "," +
         body.at("param").get<std::string>() + "," +
         std::to_string(body.at("param_value").get<Int>()) + "," +
         std::to_string(body.at("value").get<Int>());
}

Record quadruple_record(const NormalQuadruple& quad) {
  Record r = start(RecordKind::kQuadruple);
  r.body["a"] = quad.a;
  r.body["b"] = quad.b;
  r.body["c"] = quad.c;
  r.body["d"] = quad.d;
  r.body["q"] = quad.q();
  return r;
}

Record pair_record(const EisensteinPair& p, Int k) {
  Record r = start(RecordKind::kEisensteinPair);
  r.body["m"] = p.m;
  r.body["n"] = p.n;
  r.body["k"] = k;
  return r;
}

Record triple_record(const EisensteinTriple& t) {
  Record r = start(RecordKind::kEisensteinTriple);
  r.body["m"] = t.m;
  r.body["n"] = t.n;
  r.body["k"] = t.k;
  r.body["primitive"] = t.primitive;
  if (t.source) {
    r.body["form"] = t.source->form;
    r.body["u"] = t.source->u;
    r.body["v"] = t.source->v;
  }
  return r;
}

Record triangle_record(const LatticeTriangle& t, const CoeffMatrix& cm, Int m, Int n) {
  Record r = start(RecordKind::kTriangle);
  r.body["O"] = point(Vec3{});
  r.body["P"] = point(t.p);
  r.body["Q"] = point(t.q);
  r.body["side_sq"] = t.side_sq;
  r.body["provenance"] = {{"quad", quad_array(cm.quad)},
                          {"rs", ordered_json::array({cm.rs.r, cm.rs.s})},
                          {"mn", ordered_json::array({m, n})}};
  return r;
}

Record tetrahedron_record(const LatticeTetrahedron& t, const Provenance* provenance) {
  Record r = start(RecordKind::kTetrahedron);
  r.body["vertices"] = tetra_array(t);
  r.body["side_sq"] = t.side_sq;
  r.body["ell"] = t.ell;
  if (provenance) {
    r.body["provenance"] = {{"quad", quad_array(provenance->quad)},
                            {"rs", ordered_json::array({provenance->rs.r, provenance->rs.s})},
                            {"mn", ordered_json::array({provenance->m, provenance->n})},
                            {"sign", provenance->sign > 0 ? "+" : "-"}};
  }
  return r;
}

Record normal_set_record(const FaceNormalSet& f) {
  Record r = start(RecordKind::kNormalSet);
  ordered_json faces = ordered_json::array();
  for (const auto& face : f.faces) {
    faces.push_back(ordered_json::array({face.normal.x, face.normal.y, face.normal.z, face.d}));
  }
  r.body["faces"] = std::move(faces);
  r.body["ell"] = f.ell;
  r.body["orthogonal"] = verify_orthogonality(f);
  return r;
}

Record count_record(std::string_view subject, std::string_view param, Int param_value,
                    Int value) {
  Record r = start(RecordKind::kCount);
  r.body["subject"] = subject;
  r.body["param"] = param;
  r.body["param_value"] = param_value;
  r.body["value"] = value;
  return r;
}

Record diff_record(std::string_view subject, const oracle::CompareReport& report) {
  Record r = start(RecordKind::kDiff);
  r.body["subject"] = subject;
  r.body["equal"] = report.empty();
  ordered_json missing = ordered_json::array();
  for (const auto& t : report.missing_from_parametrized) missing.push_back(tetra_array(t));
  ordered_json extra = ordered_json::array();
  for (const auto& t : report.extra_in_parametrized) extra.push_back(tetra_array(t));
  r.body["missing_from_parametrized"] = std::move(missing);
  r.body["extra_in_parametrized"] = std::move(extra);
  return r;
}

Record bfile_diff_record(std::string_view subject,
                         const std::vector<oracle::OffsetReport>& reports) {
  Record r = start(RecordKind::kDiff);
  r.body["subject"] = subject;
  bool any = false;
  ordered_json offsets = ordered_json::array();
  for (const auto& rep : reports) {
    any = any || rep.match();
    offsets.push_back({{"offset", rep.offset},
                       {"compared", rep.compared},
                       {"match", rep.match()},
                       {"mismatched_n", rep.mismatched_n}});
  }
  r.body["equal"] = any;
  r.body["offsets"] = std::move(offsets);
  return r;
}

Record parse_record(std::string_view line) {
  nlohmann::ordered_json body;
  try {
    body = nlohmann::ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("malformed record: ") + e.what());
  }
  if (!body.is_object() || !body.contains("kind") || !body["kind"].is_string()) {
    fail(ErrorKind::kParse, "record has no string 'kind' field");
  }
  RecordKind kind = record_kind_from(body["kind"].get<std::string>());
  return {kind, std::move(body)};
}

std::array<Vec3, 4> tetrahedron_vertices(const Record& r) {
  if (r.kind != RecordKind::kTetrahedron) fail(ErrorKind::kParse, "not a tetrahedron record");
  const auto& vs = r.body.at("vertices");
  if (!vs.is_array() || vs.size() != 4) fail(ErrorKind::kParse, "expected four vertices");
  return {read_point(vs[0]), read_point(vs[1]), read_point(vs[2]), read_point(vs[3])};
}

Int reverify(const Record& r) {
  try {
    switch (r.kind) {
      case RecordKind::kTetrahedron: {
        const auto v = tetrahedron_vertices(r);
        const Int side = verify_regular(v[0], v[1], v[2], v[3]);
        if (r.body.contains("side_sq") && r.body["side_sq"].get<Int>() != side) {
          fail(ErrorKind::kVerification, "recorded side_sq disagrees with the vertices");
        }
        return side;
      }
      case RecordKind::kTriangle: {
        const Vec3 o = read_point(r.body.at("O"));
        const Int side = verify_equilateral(read_point(r.body.at("P")) - o,
                                            read_point(r.body.at("Q")) - o);
        if (r.body.contains("side_sq") && r.body["side_sq"].get<Int>() != side) {
          fail(ErrorKind::kVerification, "recorded side_sq disagrees with the vertices");
        }
        return side;
      }
      case RecordKind::kQuadruple:
        validate({r.body.at("a").get<Int>(), r.body.at("b").get<Int>(),
                  r.body.at("c").get<Int>(), r.body.at("d").get<Int>()});
        return 0;
      case RecordKind::kNormalSet: {
        FaceNormalSet f;
        const auto& faces = r.body.at("faces");
        if (!faces.is_array() || faces.size() != 4) fail(ErrorKind::kParse, "expected four faces");
        for (int i = 0; i < 4; ++i) {
          const auto q = read_quad(faces[i]);
          f.faces[i] = {{q.a, q.b, q.c}, q.d};
        }
        if (!verify_orthogonality(f)) {
          fail(ErrorKind::kVerification, "face normals are not orthogonal");
        }
        return 0;
      }
      default:
        return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kParse, std::string("malformed record: ") + e.what());
  }
}

}  // namespace ltet
