#include "eexact/json_io.hpp"

#include <algorithm>

namespace eexact {

namespace {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int json_int(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      fail(ErrorKind::BadInput, ctx + ": '" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  fail(ErrorKind::BadInput, ctx + ": expected an integer");
}

void expect_object(const Json& o, const std::string& ctx) {
  if (!o.is_object()) fail(ErrorKind::BadInput, ctx + ": expected an object");
}

void expect_fields(const Json& o, std::initializer_list<const char*> allowed,
                   const std::string& ctx) {
  expect_object(o, ctx);
  for (const auto& item : o.items()) {
    bool ok = false;
    for (const char* f : allowed)
      if (item.key() == f) ok = true;
    if (!ok) fail(ErrorKind::BadInput, ctx + ": unknown field '" + item.key() + "'");
  }
}

const Json& require(const Json& o, const char* field, const std::string& ctx) {
  auto it = o.find(field);
  if (it == o.end()) fail(ErrorKind::BadInput, ctx + ": missing field '" + field + "'");
  return *it;
}

std::vector<Int> json_int_list(const Json& j, const std::string& ctx) {
  if (!j.is_array()) fail(ErrorKind::BadInput, ctx + ": expected an array");
  std::vector<Int> out;
  for (const Json& e : j) out.push_back(json_int(e, ctx));
  return out;
}

IntMatrix json_matrix(const Json& j, int cols_if_empty, const std::string& ctx) {
  if (!j.is_array()) fail(ErrorKind::BadInput, ctx + ": expected an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const Json& r : j) rows.push_back(json_int_list(r, ctx));
  int cols = rows.empty() ? cols_if_empty : static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols) fail(ErrorKind::BadInput, ctx + ": ragged matrix");
  IntMatrix A(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j2 = 0; j2 < A.cols; ++j2) A.at(i, j2) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)];
  return A;
}

RingSpec parse_ring(const Json& j, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Z") return RingSpec::integers();
    fail(ErrorKind::BadInput, ctx + ": ring must be \"Z\" or {\"Zmod\": n}");
  }
  expect_fields(j, {"Zmod"}, ctx + ".ring");
  return RingSpec::zmod(json_int(require(j, "Zmod", ctx + ".ring"), ctx + ".ring.Zmod"));
}

// strips and validates an optional {"schema","kind"} wrapper on a nested node
Json unwrap(const Json& o, const char* want_kind, const std::string& ctx) {
  expect_object(o, ctx);
  Json body = o;
  if (body.contains("schema") || body.contains("kind")) {
    if (!body.contains("schema") || body["schema"] != "1")
      fail(ErrorKind::BadInput, ctx + ": schema must be \"1\"");
    if (!body.contains("kind") || body["kind"] != want_kind)
      fail(ErrorKind::BadInput, ctx + ": expected kind '" + want_kind + "'");
    body.erase("schema");
    body.erase("kind");
  }
  return body;
}

FgModule parse_module_body(const Json& body, const std::string& ctx, bool* from_presentation,
                           IntMatrix* relations_out) {
  expect_fields(body, {"ring", "invariants", "generators", "relations"}, ctx);
  RingSpec ring = parse_ring(require(body, "ring", ctx), ctx);
  if (body.contains("invariants")) {
    if (body.contains("generators") || body.contains("relations"))
      fail(ErrorKind::BadInput, ctx + ": give invariants or a presentation, not both");
    return make_module(ring, json_int_list(body["invariants"], ctx + ".invariants"));
  }
  Int g = json_int(require(body, "generators", ctx), ctx + ".generators");
  if (g < 0 || !g.fits_sint_p()) fail(ErrorKind::BadInput, ctx + ": bad generator count");
  int gens = static_cast<int>(g.get_si());
  IntMatrix rel = json_matrix(require(body, "relations", ctx), gens, ctx + ".relations");
  if (rel.cols != gens) fail(ErrorKind::BadInput, ctx + ": relation width != generators");
  FgModule F = free_module(ring, gens);
  std::vector<Coords> rows;
  for (int i = 0; i < rel.rows; ++i) rows.push_back(rel.row(i));
  FgModule M = quotient(F, span(F, std::move(rows))).mod;
  if (from_presentation) *from_presentation = true;
  if (relations_out) *relations_out = rel;
  return M;
}

FgModule parse_module_node(const Json& o, const std::string& ctx) {
  return parse_module_body(unwrap(o, "module", ctx), ctx, nullptr, nullptr);
}

Morphism parse_morphism_body(const Json& body, const std::string& ctx) {
  expect_fields(body, {"source", "target", "matrix"}, ctx);
  FgModule src = parse_module_node(require(body, "source", ctx), ctx + ".source");
  FgModule tgt = parse_module_node(require(body, "target", ctx), ctx + ".target");
  IntMatrix A = json_matrix(require(body, "matrix", ctx), src.size(), ctx + ".matrix");
  if (A.rows == 0 && tgt.size() == 0) A = IntMatrix(0, src.size());
  return make_morphism(src, tgt, std::move(A));
}

Morphism parse_morphism_node(const Json& o, const std::string& ctx) {
  return parse_morphism_body(unwrap(o, "morphism", ctx), ctx);
}

CochainComplex parse_complex_body(const Json& body, const std::string& ctx) {
  expect_fields(body, {"maps", "pad_left", "pad_right"}, ctx);
  const Json& maps = require(body, "maps", ctx);
  if (!maps.is_array() || maps.empty())
    fail(ErrorKind::BadInput, ctx + ": maps must be a nonempty array");
  std::vector<Morphism> diffs;
  int k = 0;
  for (const Json& m : maps)
    diffs.push_back(parse_morphism_node(m, ctx + ".maps[" + std::to_string(k++) + "]"));
  auto flag = [&](const char* name) {
    if (!body.contains(name)) return false;
    if (!body[name].is_boolean()) fail(ErrorKind::BadInput, ctx + ": " + name + " must be a bool");
    return body[name].get<bool>();
  };
  return make_complex(std::move(diffs), flag("pad_left"), flag("pad_right"));
}

CochainComplex parse_complex_node(const Json& o, const std::string& ctx) {
  return parse_complex_body(unwrap(o, "complex", ctx), ctx);
}

Diagram parse_diagram_body(const Json& body, const std::string& ctx) {
  expect_fields(body, {"rows", "verticals"}, ctx);
  const Json& rows = require(body, "rows", ctx);
  const Json& verts = require(body, "verticals", ctx);
  if (!rows.is_array() || !verts.is_array())
    fail(ErrorKind::BadInput, ctx + ": rows/verticals must be arrays");
  std::vector<CochainComplex> cs;
  int k = 0;
  for (const Json& r : rows)
    cs.push_back(parse_complex_node(r, ctx + ".rows[" + std::to_string(k++) + "]"));
  std::vector<std::vector<Morphism>> vs;
  k = 0;
  for (const Json& row : verts) {
    if (!row.is_array()) fail(ErrorKind::BadInput, ctx + ": verticals rows must be arrays");
    std::vector<Morphism> v;
    int j = 0;
    for (const Json& m : row)
      v.push_back(parse_morphism_node(
          m, ctx + ".verticals[" + std::to_string(k) + "][" + std::to_string(j++) + "]"));
    vs.push_back(std::move(v));
    ++k;
  }
  return make_diagram(std::move(cs), std::move(vs));
}

}  // namespace

Document parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
  }
  expect_object(root, "document");
  if (!root.contains("schema") || root["schema"] != "1")
    fail(ErrorKind::BadInput, "document: schema must be \"1\"");
  std::string kind = require(root, "kind", "document").is_string()
                         ? root["kind"].get<std::string>()
                         : std::string();
  Json body = root;
  body.erase("schema");
  body.erase("kind");

  Document doc;
  try {
    if (kind == "module") {
      doc.kind = Document::Kind::Module;
      doc.module = parse_module_body(body, "module", &doc.from_presentation, &doc.relations);
    } else if (kind == "morphism") {
      doc.kind = Document::Kind::Morphism;
      doc.morphism = parse_morphism_body(body, "morphism");
    } else if (kind == "complex") {
      doc.kind = Document::Kind::Complex;
      doc.complex = parse_complex_body(body, "complex");
    } else if (kind == "diagram") {
      doc.kind = Document::Kind::Diagram;
      doc.diagram = parse_diagram_body(body, "diagram");
    } else {
      fail(ErrorKind::BadInput, "document: kind must be module|morphism|complex|diagram");
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::BadInput, std::string("malformed document: ") + e.what());
  }
  return doc;
}

Json ring_json(const RingSpec& r) {
  if (r.is_integers()) return Json("Z");
  return Json{{"Zmod", int_json(r.n)}};
}

Json matrix_json(const IntMatrix& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < A.cols; ++j) row.push_back(int_json(A.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json coords_json(const Coords& x) {
  Json out = Json::array();
  for (const Int& v : x) out.push_back(int_json(v));
  return out;
}

Json module_json(const FgModule& M) {
  Json inv = Json::array();
  for (const Int& d : M.invariants) inv.push_back(int_json(d));
  return Json{{"ring", ring_json(M.ring)}, {"invariants", std::move(inv)}};
}

Json morphism_json(const Morphism& f) {
  return Json{{"source", module_json(f.source)},
              {"target", module_json(f.target)},
              {"matrix", matrix_json(f.matrix)}};
}

Json complex_json(const CochainComplex& c) {
  Json maps = Json::array();
  for (const Morphism& f : c.diffs) maps.push_back(morphism_json(f));
  return Json{{"maps", std::move(maps)}, {"pad_left", c.pad_left}, {"pad_right", c.pad_right}};
}

Json diagram_json(const Diagram& d) {
  Json rows = Json::array();
  for (const CochainComplex& r : d.rows) rows.push_back(complex_json(r));
  Json verts = Json::array();
  for (const auto& row : d.verticals) {
    Json v = Json::array();
    for (const Morphism& m : row) v.push_back(morphism_json(m));
    verts.push_back(std::move(v));
  }
  return Json{{"rows", std::move(rows)}, {"verticals", std::move(verts)}};
}

namespace {
Json with_header(const char* kind, Json body) {
  body["schema"] = "1";
  body["kind"] = kind;
  return body;
}
}  // namespace

Json module_document(const FgModule& M) { return with_header("module", module_json(M)); }
Json morphism_document(const Morphism& f) { return with_header("morphism", morphism_json(f)); }
Json complex_document(const CochainComplex& c) { return with_header("complex", complex_json(c)); }
Json diagram_document(const Diagram& d) { return with_header("diagram", diagram_json(d)); }

Json submodule_json(const Submodule& S) {
  Json gens = Json::array();
  for (const Coords& g : S.generators) gens.push_back(coords_json(g));
  return Json{{"ambient", module_json(S.ambient)}, {"generators", std::move(gens)}};
}

Json spectral_json(const SpectralObject& s) {
  Json local = Json::object();
  for (const auto& [p, m] : s.local) local[p.get_str()] = m;
  return Json{{"rank", s.rank}, {"local", std::move(local)}};
}

Json topology_json(const GabrielTopology& F) {
  if (F.all_primes) return Json("all");
  Json ps = Json::array();
  for (const Int& p : F.primes) ps.push_back(int_json(p));
  return ps;
}

Json localized_module_json(const LocalizedModule& L) {
  Json inv = Json::array();
  for (const Int& d : L.invariants) inv.push_back(int_json(d));
  return Json{{"topology", topology_json(L.topology)}, {"invariants", std::move(inv)}};
}

Json lemma_report_json(const LemmaReport& r) {
  Json parts = Json::array();
  for (const LemmaPartStats& p : r.parts) {
    Json viols = Json::array();
    for (const LemmaViolation& v : p.violations)
      viols.push_back(Json{{"part", v.part},
                           {"seed", v.instance_seed},
                           {"detail", v.detail},
                           {"diagram", Json::parse(v.diagram_json)}});
    parts.push_back(Json{{"part", p.part},
                         {"requested", p.requested},
                         {"instances", p.instances},
                         {"failed_instances", p.failed_instances},
                         {"attempts", p.attempts},
                         {"violations", std::move(viols)}});
  }
  return Json{{"lemma", lemma_kind_name(r.kind)},
              {"seed", r.seed},
              {"topology", topology_json(r.topology)},
              {"parts", std::move(parts)}};
}

Json no_functor_json(const NoFunctorDemo& d) {
  return Json{{"witness_module_singular", d.witness_module_singular},
              {"witness_complex_not_e_exact", d.witness_complex_not_e_exact},
              {"essential_monos_localized", d.essential_monos_localized},
              {"essential_monos_checked", d.essential_monos_checked},
              {"extensions_collapsed", d.extensions_collapsed},
              {"extensions_checked", d.extensions_checked},
              {"z_witness_loc_exact", d.z_witness_loc_exact},
              {"z_witness_not_e_exact", d.z_witness_not_e_exact},
              {"conclusion", d.conclusion}};
}

GabrielTopology parse_primes_flag(const std::string& text) {
  if (text == "all") return GabrielTopology::goldie();
  if (text == "none") return GabrielTopology::trivial();
  std::vector<Int> primes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) fail(ErrorKind::BadInput, "--primes: empty entry");
    Int p;
    if (mpz_set_str(p.get_mpz_t(), tok.c_str(), 10) != 0)
      fail(ErrorKind::BadInput, "--primes: '" + tok + "' is not an integer");
    primes.push_back(p);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return GabrielTopology::of_primes(std::move(primes));
}

}  // namespace eexact
