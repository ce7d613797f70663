#include "perfekt/io.hpp"

#include <fstream>
#include <sstream>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return v;
}

std::vector<Vec> vecs_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& v : j) {
    out.push_back(vec_from_json(v));
    if (static_cast<int>(out.back().size()) != n) throw DimensionMismatch("vector length differs from n");
  }
  return out;
}

std::vector<IntVec> intvecs_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integer vectors");
  std::vector<IntVec> out;
  for (const auto& v : j) out.push_back(intvec_from_json(v));
  return out;
}

void check_field(int declared, int actual) {
  if (declared != 0 && actual != 0 && declared != actual) {
    throw FieldMismatch("entries live in Q(sqrt " + std::to_string(actual) + ") but d = " + std::to_string(declared));
  }
}

MinStatus status_from_name(const std::string& s) {
  for (auto st : {MinStatus::Attained, MinStatus::InfimumNotAttained, MinStatus::InfimumZeroNotAttained,
                  MinStatus::NegativeUnbounded, MinStatus::BoundaryUnsupported}) {
    if (status_name(st) == s) return st;
  }
  throw InputError("unknown status \"" + s + "\"");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const Scalar& x) { return x.str(); }

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const IntVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const std::vector<IntVec>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Json to_json(const SymMatrix& q) {
  Json j;
  j["n"] = q.dim();
  if (q.field() != 0) j["d"] = q.field();
  Json rows = Json::array();
  for (const auto& r : q.rows()) rows.push_back(to_json(r));
  j["rows"] = rows;
  return j;
}

Json to_json(const Cone& k) {
  Json j;
  j["n"] = k.dim();
  if (k.field() != 0) j["d"] = k.field();
  Json g = Json::array(), f = Json::array();
  for (const auto& v : k.generators()) g.push_back(to_json(v));
  for (const auto& v : k.facets()) f.push_back(to_json(v));
  j["generators"] = g;
  j["facets"] = f;
  j["rationally_generated"] = k.rationally_generated();
  j["tag"] = k.tag();
  return j;
}

Json to_json(const MinResult& r) {
  Json j;
  j["status"] = status_name(r.status);
  if (r.value) j["value"] = to_json(*r.value);
  j["min_vectors"] = to_json(r.min_vectors);
  j["infinite"] = r.infinite;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const PerfectResult& r) {
  Json j;
  j["perfect"] = r.perfect;
  j["q"] = to_json(r.q);
  j["min_vectors"] = to_json(r.min_vectors);
  j["rank"] = r.rank;
  j["rank_witness"] = to_json(r.rank_witness);
  return j;
}

Json to_json(const RyshkovVertex& v) {
  Json j;
  j["q"] = to_json(v.q);
  j["min_vectors"] = to_json(v.min_vectors);
  j["perfect"] = v.perfect;
  j["infinite"] = v.infinite;
  return j;
}

Json to_json(const std::vector<RyshkovVertex>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Json to_json(const TraversalResult& t) {
  Json j;
  j["vertices"] = to_json(t.vertices);
  Json rays = Json::array();
  for (const auto& [i, d] : t.rays) rays.push_back({{"vertex", i}, {"direction", to_json(d)}});
  j["rays"] = rays;
  j["budget_exhausted"] = t.budget_exhausted;
  return j;
}

Json to_json(const NeighborResult& r) {
  Json j;
  if (const auto* v = std::get_if<RyshkovVertex>(&r.result)) {
    j["kind"] = "vertex";
    j["vertex"] = to_json(*v);
  } else {
    j["kind"] = "ray";
    j["direction"] = to_json(std::get<ExtremeRayDirection>(r.result).direction);
  }
  if (r.step) j["step"] = to_json(*r.step);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  Json al = Json::array();
  for (const auto& a : c.alphas) al.push_back(to_json(a));
  j["alphas"] = al;
  j["vectors"] = to_json(c.vectors);
  if (c.q) j["q"] = to_json(*c.q);
  j["inner_product"] = to_json(c.inner_product);
  j["evidence"] = c.evidence;
  j["visited"] = c.visited;
  j["report"] = c.report;
  return j;
}

Json to_json(const ContinuedFraction& cf) {
  Json j;
  j["quotients"] = to_json(cf.quotients);
  j["source"] = cf.source == CFSource::QuadraticIrrational ? "quadratic"
                : cf.source == CFSource::EulerE           ? "e"
                                                          : "rational";
  if (cf.period_start) {
    j["period_start"] = *cf.period_start;
    j["period_length"] = cf.period_length;
  }
  return j;
}

Json to_json(const std::vector<Convergent>& cs) {
  Json j = Json::array();
  for (const auto& c : cs) j.push_back({{"index", c.index}, {"p", to_json(c.p)}, {"q", to_json(c.q)}});
  return j;
}

Json to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& i : r) items.push_back({{"key", i.key}, {"pass", i.pass}, {"detail", i.detail}});
  return {{"pass", all_pass(r)}, {"items", items}};
}

Json to_json(const Sqrt2Figure& f) {
  Json j;
  Json vs = Json::array(), es = Json::array(), rs = Json::array();
  for (const auto& v : f.vertices) {
    vs.push_back({{"name", v.name},
                  {"q", to_json(v.q)},
                  {"tight", to_json(v.tight)},
                  {"infinite", v.infinite},
                  {"perfect", v.perfect}});
  }
  for (const auto& e : f.edges) {
    es.push_back({{"from", e.from},
                  {"to", e.to},
                  {"direction", to_json(e.direction)},
                  {"length", to_json(e.length)},
                  {"tight", to_json(e.tight)}});
  }
  for (const auto& r : f.rays) {
    rs.push_back({{"from", r.from}, {"direction", to_json(r.direction)}, {"tight", to_json(r.tight)}});
  }
  j["vertices"] = vs;
  j["edges"] = es;
  j["rays"] = rs;
  return j;
}

Json to_json(const std::vector<EEvidenceItem>& items) {
  Json j = Json::array();
  for (const auto& i : items) {
    j.push_back({{"eps", to_string(i.eps)},
                 {"p", i.p.get_str()},
                 {"q", i.q.get_str()},
                 {"upper", to_string(i.upper)},
                 {"upper_approx", std::to_string(i.upper.get_d())},
                 {"target", to_string(i.target)}});
  }
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError("scalars must be strings such as \"3/2\" or \"(1)+(1/2)*sqrt(2)\"");
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw InputError("expected an integer");
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

SymMatrix matrix_from_json(const Json& j) {
  int n = int_field(j, "n");
  if (n < 1) throw InputError("n must be positive");
  const Json& rows = array_field(j, "rows");
  if (static_cast<int>(rows.size()) != n) throw DimensionMismatch("matrix has wrong number of rows");
  Matrix m;
  for (const auto& r : rows) {
    m.push_back(vec_from_json(r));
    if (static_cast<int>(m.back().size()) != n) throw DimensionMismatch("matrix row has wrong length");
  }
  SymMatrix q = SymMatrix::from_rows(m);
  int d = q.field();  // throws on mixed fields
  if (j.contains("d")) check_field(int_field(j, "d"), d);
  return q;
}

Cone cone_from_json(const Json& j) {
  int n = int_field(j, "n");
  if (n < 1) throw InputError("n must be positive");
  std::string tag = j.contains("tag") ? field(j, "tag").get<std::string>() : "custom";
  Cone k = [&] {
    if (tag == "classical") return Cone::classical(n);
    if (!j.contains("generators")) {
      if (tag == "orthant") return Cone::orthant(n);
      if (tag == "sqrt2" && n == 2) return Cone::sqrt2();
      throw InputError("missing key \"generators\"");
    }
    auto gens = vecs_from_json(field(j, "generators"), n);
    std::optional<bool> rg;
    if (j.contains("rationally_generated")) rg = field(j, "rationally_generated").get<bool>();
    if (j.contains("facets") && !field(j, "facets").empty()) {
      auto facets = vecs_from_json(field(j, "facets"), n);
      bool rational = true;
      for (const auto& g : gens) rational = rational && std::all_of(g.begin(), g.end(), [](const Scalar& x) {
                                             return x.is_rational();
                                           });
      return Cone::from_representation(gens, facets, rg.value_or(rational), tag);
    }
    return Cone::from_generators(gens, rg, tag);
  }();
  if (k.dim() != n) throw DimensionMismatch("cone dimension differs from n");
  int d = k.field();
  if (j.contains("d")) check_field(int_field(j, "d"), d);
  return k;
}

MinResult min_result_from_json(const Json& j) {
  MinResult r;
  r.status = status_from_name(field(j, "status").get<std::string>());
  if (j.contains("value")) r.value = scalar_from_json(j.at("value"));
  r.min_vectors = intvecs_from_json(field(j, "min_vectors"));
  r.infinite = j.value("infinite", false);
  if (j.contains("witness")) r.witness = intvec_from_json(j.at("witness"));
  return r;
}

RyshkovVertex vertex_from_json(const Json& j) {
  RyshkovVertex v;
  v.q = matrix_from_json(field(j, "q"));
  v.min_vectors = intvecs_from_json(field(j, "min_vectors"));
  v.perfect = j.value("perfect", false);
  v.infinite = j.value("infinite", false);
  return v;
}

std::vector<RyshkovVertex> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of vertices");
  std::vector<RyshkovVertex> out;
  for (const auto& v : j) out.push_back(vertex_from_json(v));
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "factorization") {
    c.kind = CertificateKind::Factorization;
  } else if (kind == "separation") {
    c.kind = CertificateKind::Separation;
  } else if (kind == "inconclusive") {
    c.kind = CertificateKind::Inconclusive;
  } else {
    throw InputError("unknown certificate kind \"" + kind + "\"");
  }
  for (const auto& a : array_field(j, "alphas")) c.alphas.push_back(scalar_from_json(a));
  c.vectors = intvecs_from_json(field(j, "vectors"));
  if (j.contains("q")) c.q = matrix_from_json(j.at("q"));
  c.inner_product = scalar_from_json(field(j, "inner_product"));
  c.evidence = j.value("evidence", "");
  c.visited = j.value("visited", 0);
  c.report = j.value("report", "");
  return c;
}

}  // namespace perfekt
