#include "ribbonlab/face_model.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ribbonlab {

using ordered_json = nlohmann::ordered_json;

FaceModel FaceModel::create(GraphPtr graph,
                            std::vector<std::pair<FaceKey, Complex>> faces) {
  FaceModel m;
  m.graph_ = std::move(graph);
  for (auto& [key, w] : faces) {
    if (!m.is_face(key.r, key.p, key.q, key.s)) {
      const OrientedGraph& g = *m.graph_;
      throw Error(ErrorKind::Parse,
                  "weight on a non-face quadruple (r=" + g.edge_id(key.r) +
                      " p=" + g.edge_id(key.p) + " q=" + g.edge_id(key.q) +
                      " s=" + g.edge_id(key.s) + ")");
    }
    if (m.faces_.count(key))
      throw Error(ErrorKind::Parse, "duplicate face");
    m.faces_[key] = w;
  }
  return m;
}

bool FaceModel::is_face(int r, int p, int q, int s) const {
  const OrientedGraph& g = *graph_;
  int E = g.edge_count();
  if (r < 0 || p < 0 || q < 0 || s < 0 || r >= E || p >= E || q >= E || s >= E)
    return false;
  return g.edge_src(p) == g.edge_src(r) && g.edge_dst(p) == g.edge_src(s) &&
         g.edge_dst(r) == g.edge_src(q) && g.edge_dst(q) == g.edge_dst(s);
}

Complex FaceModel::weight(int r, int p, int q, int s) const {
  auto it = faces_.find(FaceKey{r, p, q, s});
  return it == faces_.end() ? Complex(0.0, 0.0) : it->second;
}

BlockOperator FaceModel::as_operator(SpacePtr deg2_space) const {
  if (deg2_space->degree() != 2 || &deg2_space->graph() != graph_.get())
    throw Error(ErrorKind::DimensionMismatch,
                "face-model operator needs the degree-2 space of its graph");
  Matrix out = Matrix::Zero(deg2_space->dim(), deg2_space->dim());
  for (const auto& [key, w] : faces_) {
    // input path (top, right) = p.s ; output path (left, bottom) = r.q
    Path in{graph_->edge_src(key.p), {key.p, key.s}};
    Path outp{graph_->edge_src(key.r), {key.r, key.q}};
    int j = deg2_space->index_of(in);
    int i = deg2_space->index_of(outp);
    if (i < 0 || j < 0)
      throw Error(ErrorKind::Internal, "face path missing from space");
    out(i, j) += w;
  }
  return BlockOperator(deg2_space, std::move(out));
}

FaceModel scale_model(const FaceModel& m, Complex a) {
  if (a == Complex(0.0, 0.0))
    throw Error(ErrorKind::BadParams, "scale factor must be nonzero");
  std::vector<std::pair<FaceKey, Complex>> faces;
  faces.reserve(m.faces().size());
  for (const auto& [key, w] : m.faces()) faces.push_back({key, a * w});
  return FaceModel::create(m.graph_ptr(), std::move(faces));
}

// --------------------------------------------------------------------------
// JSON I/O

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}

void require_keys(const ordered_json& obj, const char* where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) parse_fail(std::string(where) + " must be an object");
  for (auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* r : required)
      if (k == r) known = true;
    for (const char* o : optional)
      if (k == o) known = true;
    if (!known)
      parse_fail(std::string("unknown key '") + k + "' in " + where);
  }
  for (const char* r : required)
    if (!obj.contains(r))
      parse_fail(std::string("missing key '") + r + "' in " + where);
}

Complex complex_from_json(const ordered_json& j, const char* where) {
  require_keys(j, where, {"re", "im"});
  if (!j["re"].is_number() || !j["im"].is_number())
    parse_fail(std::string(where) + ": re/im must be numbers");
  return Complex(j["re"].get<double>(), j["im"].get<double>());
}

ordered_json complex_to_json(Complex z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

Path path_from_json(const ordered_json& j, const OrientedGraph& g,
                    const char* where) {
  // Degree-0 paths are encoded as {"vertex": id}, positive degree as a list
  // of edge ids.
  if (j.is_object()) {
    require_keys(j, where, {"vertex"});
    int v = g.vertex_index(j["vertex"].get<std::string>());
    if (v < 0) parse_fail(std::string(where) + ": unknown vertex");
    return Path{v, {}};
  }
  if (!j.is_array() || j.empty())
    parse_fail(std::string(where) + ": path must be a non-empty edge list");
  Path p;
  for (const auto& item : j) {
    int e = g.edge_index(item.get<std::string>());
    if (e < 0) parse_fail(std::string(where) + ": unknown edge");
    if (p.edges.empty())
      p.start = g.edge_src(e);
    else if (g.edge_dst(p.edges.back()) != g.edge_src(e))
      parse_fail(std::string(where) + ": edges do not compose");
    p.edges.push_back(e);
  }
  return p;
}

ordered_json path_to_json(const Path& p, const OrientedGraph& g) {
  if (p.degree() == 0) return ordered_json{{"vertex", g.vertex_id(p.start)}};
  ordered_json arr = ordered_json::array();
  for (int e : p.edges) arr.push_back(g.edge_id(e));
  return arr;
}

GroupLikeVector glv_from_json(const ordered_json& j, const OrientedGraph& g,
                              const char* where) {
  if (!j.is_array()) parse_fail(std::string(where) + " must be an array");
  GroupLikeVector v;
  for (const auto& term : j) {
    require_keys(term, where, {"p", "q", "c"});
    GroupLikeTerm t;
    t.p = path_from_json(term["p"], g, where);
    t.q = path_from_json(term["q"], g, where);
    t.coeff = complex_from_json(term["c"], where);
    if (t.p.degree() != t.q.degree())
      parse_fail(std::string(where) + ": paired paths of unequal degree");
    v.terms.push_back(std::move(t));
  }
  return v;
}

ordered_json glv_to_json(const GroupLikeVector& v, const OrientedGraph& g) {
  ordered_json out = ordered_json::array();
  for (const auto& t : v.terms)
    out.push_back(ordered_json{{"p", path_to_json(t.p, g)},
                               {"q", path_to_json(t.q, g)},
                               {"c", complex_to_json(t.coeff)}});
  return out;
}

std::vector<Complex> diagonal_from_json(const ordered_json& j,
                                        const OrientedGraph& g,
                                        const char* where) {
  if (!j.is_object()) parse_fail(std::string(where) + " must be an object");
  std::vector<Complex> d(g.edge_count(), Complex(0.0, 0.0));
  std::vector<bool> seen(g.edge_count(), false);
  for (auto& [k, val] : j.items()) {
    int e = g.edge_index(k);
    if (e < 0) parse_fail(std::string(where) + ": unknown edge '" + k + "'");
    d[e] = complex_from_json(val, where);
    seen[e] = true;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!seen[e])
      parse_fail(std::string(where) + ": missing edge '" + g.edge_id(e) + "'");
  return d;
}

ordered_json diagonal_to_json(const std::vector<Complex>& d,
                              const OrientedGraph& g) {
  ordered_json out = ordered_json::object();
  for (int e = 0; e < g.edge_count(); ++e)
    out[g.edge_id(e)] = complex_to_json(d[e]);
  return out;
}

ModelMetadata metadata_from_json(const ordered_json& j,
                                 const OrientedGraph& g) {
  require_keys(j, "metadata", {"family"},
               {"params", "ints", "m_plus", "m_minus", "s2", "lambda",
                "hecke_a", "hecke_b", "det", "quad", "det_compatible"});
  ModelMetadata md;
  md.family = j["family"].get<std::string>();
  if (j.contains("params"))
    for (auto& [k, v] : j["params"].items())
      md.params[k] = complex_from_json(v, "metadata.params");
  if (j.contains("ints"))
    for (auto& [k, v] : j["ints"].items()) md.ints[k] = v.get<double>();
  if (j.contains("m_plus"))
    md.m_plus = diagonal_from_json(j["m_plus"], g, "metadata.m_plus");
  if (j.contains("m_minus"))
    md.m_minus = diagonal_from_json(j["m_minus"], g, "metadata.m_minus");
  if (j.contains("s2")) md.s2 = diagonal_from_json(j["s2"], g, "metadata.s2");
  if (j.contains("lambda"))
    md.lambda = complex_from_json(j["lambda"], "metadata.lambda");
  if (j.contains("hecke_a"))
    md.hecke_a = complex_from_json(j["hecke_a"], "metadata.hecke_a");
  if (j.contains("hecke_b"))
    md.hecke_b = complex_from_json(j["hecke_b"], "metadata.hecke_b");
  if (j.contains("det")) md.det = glv_from_json(j["det"], g, "metadata.det");
  if (j.contains("quad"))
    md.quad = glv_from_json(j["quad"], g, "metadata.quad");
  if (j.contains("det_compatible"))
    md.det_compatible = j["det_compatible"].get<bool>();
  return md;
}

ordered_json metadata_to_json(const ModelMetadata& md,
                              const OrientedGraph& g) {
  ordered_json j = ordered_json::object();
  j["family"] = md.family;
  if (!md.params.empty()) {
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : md.params) p[k] = complex_to_json(v);
    j["params"] = p;
  }
  if (!md.ints.empty()) {
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : md.ints) p[k] = v;
    j["ints"] = p;
  }
  if (md.m_plus) j["m_plus"] = diagonal_to_json(*md.m_plus, g);
  if (md.m_minus) j["m_minus"] = diagonal_to_json(*md.m_minus, g);
  if (md.s2) j["s2"] = diagonal_to_json(*md.s2, g);
  if (md.lambda) j["lambda"] = complex_to_json(*md.lambda);
  if (md.hecke_a) j["hecke_a"] = complex_to_json(*md.hecke_a);
  if (md.hecke_b) j["hecke_b"] = complex_to_json(*md.hecke_b);
  if (md.det) j["det"] = glv_to_json(*md.det, g);
  if (md.quad) j["quad"] = glv_to_json(*md.quad, g);
  if (md.det_compatible) j["det_compatible"] = *md.det_compatible;
  return j;
}

}  // namespace

ModelFile load_model_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  require_keys(j, "model", {"vertices", "edges", "faces"}, {"metadata"});

  if (!j["vertices"].is_array()) parse_fail("'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) parse_fail("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }

  if (!j["edges"].is_array()) parse_fail("'edges' must be an array");
  std::vector<EdgeSpec> edges;
  for (const auto& e : j["edges"]) {
    require_keys(e, "edge", {"id", "src", "dst"});
    edges.push_back(EdgeSpec{e["id"].get<std::string>(),
                             e["src"].get<std::string>(),
                             e["dst"].get<std::string>()});
  }

  GraphPtr graph = OrientedGraph::create(std::move(vertices), std::move(edges));

  if (!j["faces"].is_array()) parse_fail("'faces' must be an array");
  std::vector<std::pair<FaceKey, Complex>> faces;
  for (const auto& f : j["faces"]) {
    require_keys(f, "face", {"r", "p", "q", "s", "w"});
    auto edge_of = [&](const char* k) {
      int e = graph->edge_index(f[k].get<std::string>());
      if (e < 0)
        parse_fail(std::string("face references unknown edge '") +
                   f[k].get<std::string>() + "'");
      return e;
    };
    FaceKey key{edge_of("r"), edge_of("p"), edge_of("q"), edge_of("s")};
    faces.push_back({key, complex_from_json(f["w"], "face weight")});
  }

  ModelFile mf;
  mf.model = FaceModel::create(graph, std::move(faces));
  if (j.contains("metadata"))
    mf.metadata = metadata_from_json(j["metadata"], *graph);
  return mf;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_json(ss.str());
}

std::string save_model_json(const ModelFile& mf) {
  const OrientedGraph& g = mf.model.graph();
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    j["vertices"].push_back(g.vertex_id(v));
  j["edges"] = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    j["edges"].push_back(ordered_json{{"id", g.edge_id(e)},
                                      {"src", g.vertex_id(g.edge_src(e))},
                                      {"dst", g.vertex_id(g.edge_dst(e))}});
  j["faces"] = ordered_json::array();
  for (const auto& [key, w] : mf.model.faces())
    j["faces"].push_back(ordered_json{{"r", g.edge_id(key.r)},
                                      {"p", g.edge_id(key.p)},
                                      {"q", g.edge_id(key.q)},
                                      {"s", g.edge_id(key.s)},
                                      {"w", complex_to_json(w)}});
  if (mf.metadata) j["metadata"] = metadata_to_json(*mf.metadata, g);
  return j.dump(2) + "\n";
}

void save_model_file(const ModelFile& mf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << save_model_json(mf);
}

}  // namespace ribbonlab
