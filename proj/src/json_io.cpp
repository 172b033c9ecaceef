#include "fanohull/json_io.hpp"

#include <limits>

namespace fanohull {

namespace {

long long int_to_ll(const Int& x) {
  if (x > Int(std::numeric_limits<long long>::max()) ||
      x < Int(std::numeric_limits<long long>::min()))
    throw std::invalid_argument("integer too large for a JSON number");
  return static_cast<long long>(x);
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational");
}

}  // namespace

Json int_vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_ll(x));
  return a;
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  j["lattice_dim"] = p.ambient_dim();
  Json verts = Json::array();
  for (const IntVec& v : p.vertices()) verts.push_back(int_vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

LatticePolytope lattice_polytope_from_json(const Json& j) {
  size_t dim = j.at("lattice_dim").get<size_t>();
  std::vector<IntVec> pts;
  for (const auto& v : j.at("vertices")) {
    IntVec p = int_vec_from_json(v);
    if (p.size() != dim) throw std::invalid_argument("vertex dimension mismatch");
    pts.push_back(p);
  }
  return hull(pts);
}

Json polytope_to_json(const RationalPolytope& p) {
  Json j;
  j["lattice_dim"] = p.ambient_dim();
  Json verts = Json::array();
  for (const RatVec& v : p.vertices()) {
    Json row = Json::array();
    for (const Rat& q : v) row.push_back(rat_to_string(q));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  return j;
}

RationalPolytope rational_polytope_from_json(const Json& j) {
  size_t dim = j.at("lattice_dim").get<size_t>();
  std::vector<RatVec> pts;
  for (const auto& v : j.at("vertices")) {
    RatVec p;
    for (const auto& x : v) p.push_back(rat_from_json(x));
    if (p.size() != dim) throw std::invalid_argument("vertex dimension mismatch");
    pts.push_back(p);
  }
  return RationalPolytope::from_points(dim, pts);
}

Json laurent_to_json(const LaurentPolynomial& f) {
  Json j;
  j["dim"] = f.ambient;
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms) {
    Json t;
    Json ev = Json::array();
    for (long long x : e) ev.push_back(x);
    t["e"] = ev;
    t["c"] = c.str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  LaurentPolynomial f;
  f.ambient = j.at("dim").get<size_t>();
  for (const auto& t : j.at("terms")) {
    std::vector<long long> e;
    for (const auto& x : t.at("e")) e.push_back(x.get<long long>());
    if (e.size() != f.ambient) throw std::invalid_argument("term dimension mismatch");
    f.add_term(e, int_from_json(t.at("c")));
  }
  return f;
}

Json module_to_json(const RayFamilyModule& m) {
  RayFamilyModule n = m.normalized();
  Json j;
  Json spor = Json::array();
  for (const Sporadic& s : n.sporadic) {
    Json e;
    e["degree"] = int_vec_to_json(s.degree);
    e["dim"] = s.dim;
    spor.push_back(e);
  }
  j["sporadic"] = spor;
  Json rays = Json::array();
  for (const RayFamily& r : n.rays) {
    Json e;
    e["base"] = int_vec_to_json(r.base);
    e["dir"] = int_vec_to_json(r.dir);
    e["range"] = r.two_sided ? "all" : "n>=0";
    rays.push_back(e);
  }
  j["rays"] = rays;
  return j;
}

RayFamilyModule module_from_json(const Json& j) {
  RayFamilyModule m;
  for (const auto& s : j.at("sporadic")) {
    IntVec deg = int_vec_from_json(s.at("degree"));
    m.ambient = deg.size();
    m.sporadic.push_back({deg, s.at("dim").get<int>(), ""});
  }
  for (const auto& r : j.at("rays")) {
    IntVec base = int_vec_from_json(r.at("base"));
    IntVec dir = int_vec_from_json(r.at("dir"));
    m.ambient = base.size();
    std::string range = r.at("range").get<std::string>();
    if (range != "all" && range != "n>=0")
      throw std::invalid_argument("ray range must be \"n>=0\" or \"all\"");
    m.rays.push_back({base, dir, range == "all", ""});
  }
  return m;
}

Json hull_to_json(const HullPresentation& h) {
  Json j;
  Json vars = Json::array();
  for (const HullVariable& v : h.vars) {
    Json e;
    e["name"] = v.name;
    e["weight"] = int_vec_to_json(v.weight);
    e["tdeg"] = v.tdeg;
    vars.push_back(e);
  }
  j["vars"] = vars;
  Json ideal = Json::array();
  for (const auto& g : h.ideal) {
    Json e = Json::array();
    for (const Int& x : g) e.push_back(int_to_ll(x));
    ideal.push_back(e);
  }
  j["ideal"] = ideal;
  return j;
}

HullPresentation hull_from_json(const Json& j) {
  HullPresentation h;
  for (const auto& v : j.at("vars")) {
    HullVariable hv;
    hv.name = v.at("name").get<std::string>();
    hv.weight = int_vec_from_json(v.at("weight"));
    hv.tdeg = v.contains("tdeg") ? v.at("tdeg").get<int>() : 1;
    h.vars.push_back(hv);
  }
  for (const auto& g : j.at("ideal")) {
    std::vector<Int> e;
    for (const auto& x : g) e.push_back(int_from_json(x));
    if (e.size() != h.vars.size()) throw std::invalid_argument("ideal exponent length mismatch");
    h.ideal.push_back(e);
  }
  return h;
}

Json action_generators_to_json(const std::vector<std::pair<IntMat, std::vector<size_t>>>& gens) {
  Json j;
  Json arr = Json::array();
  for (const auto& [mat, perm] : gens) {
    Json g;
    Json rows = Json::array();
    for (size_t i = 0; i < mat.rows(); ++i) rows.push_back(int_vec_to_json(mat.row(i)));
    g["matrix"] = rows;
    g["perm"] = perm;
    arr.push_back(g);
  }
  j["generators"] = arr;
  return j;
}

std::vector<std::pair<IntMat, std::vector<size_t>>> action_generators_from_json(const Json& j) {
  std::vector<std::pair<IntMat, std::vector<size_t>>> gens;
  for (const auto& g : j.at("generators")) {
    std::vector<IntVec> rows;
    for (const auto& r : g.at("matrix")) rows.push_back(int_vec_from_json(r));
    std::vector<size_t> perm;
    for (const auto& x : g.at("perm")) perm.push_back(x.get<size_t>());
    gens.push_back({IntMat(rows), perm});
  }
  return gens;
}

Json presentation_to_json(const ChartPresentation& p) {
  Json j;
  Json vars = Json::array();
  for (const ChartVariable& v : p.variables) {
    Json e;
    e["name"] = v.name;
    e["degree"] = int_vec_to_json(v.degree);
    e["invertible"] = v.invertible;
    vars.push_back(e);
  }
  j["variables"] = vars;
  Json plus = Json::array(), minus = Json::array();
  for (const Int& x : p.relation_plus) plus.push_back(int_to_ll(x));
  for (const Int& x : p.relation_minus) minus.push_back(int_to_ll(x));
  j["relation"] = Json{{"plus", plus}, {"minus", minus}};
  j["display"] = p.display();
  j["type"] = p.type_string();
  return j;
}

Json chart_report_to_json(const ChartReport& r) {
  Json j;
  j["id"] = r.id;
  j["face"] = r.face;
  Json rays = Json::array();
  for (const IntVec& ray : r.cone.rays) rays.push_back(int_vec_to_json(ray));
  j["rays"] = rays;
  j["smooth"] = r.smooth;
  j["gorenstein"] = r.gorenstein;
  j["gorenstein_index"] = int_to_ll(r.gorenstein_index);
  j["gorenstein_degree"] = r.gorenstein_degree ? int_vec_to_json(*r.gorenstein_degree) : Json();
  j["quotient_type"] = r.quotient ? Json(r.quotient->str()) : Json();
  j["hilbert_basis_size"] = r.hilbert_basis_size;
  j["presentation"] = r.presentation ? presentation_to_json(*r.presentation) : Json();
  j["qg_rigid"] = r.qg_rigid;
  return j;
}

Json certificate_to_json(const InvariantCertificate& c) {
  Json j;
  j["match"] = c.match;
  Json a = Json::array(), b = Json::array();
  for (const Int& x : c.invariant_sequence) a.push_back(int_to_ll(x));
  for (const Int& x : c.presentation_sequence) b.push_back(int_to_ll(x));
  j["invariant_hilbert_function"] = a;
  j["presentation_hilbert_function"] = b;
  return j;
}

}  // namespace fanohull
