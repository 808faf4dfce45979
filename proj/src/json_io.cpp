#include "hyperinv/json_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace hyperinv {

namespace {

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "/" + key, "missing required field");
  return *it;
}

std::string string_at(const Json& value, const std::string& path) {
  if (!value.is_string()) throw InputError(path, "expected a string");
  return value.get<std::string>();
}

// Accepts integers encoded as JSON numbers or strings.
long integer_at(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return value.get<long>();
  if (value.is_string()) {
    try {
      const Rat r = Rat::parse(value.get<std::string>());
      if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
    } catch (const ValidationError&) {
    }
  }
  throw InputError(path, "expected an integer");
}

Rat rat_at(const Json& value, const std::string& path) {
  try {
    return Rat::parse(string_at(value, path));
  } catch (const InputError&) {
    throw;
  } catch (const ValidationError& e) {
    throw InputError(path, e.what());
  }
}

double real_at(const Json& value, const std::string& path) {
  try {
    return parse_real(string_at(value, path));
  } catch (const InputError&) {
    throw;
  } catch (const ValidationError& e) {
    throw InputError(path, e.what());
  }
}

template <typename F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const ValidationError& e) {
    throw InputError(path, e.what());
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path, std::string("malformed JSON: ") + e.what());
  }
}

CurveDocument parse_curve(const Json& doc) {
  if (!doc.is_object()) throw InputError("", "expected an object");
  const long genus = integer_at(member(doc, "genus", ""), "/genus");
  const Json& roots = member(doc, "roots", "");
  if (!roots.is_array()) throw InputError("/roots", "expected an array");
  std::vector<ProjRat> values;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::string path = "/roots/" + std::to_string(i);
    values.push_back(at_path(path, [&] { return ProjRat::parse(string_at(roots[i], path)); }));
  }
  std::optional<long> prime;
  if (doc.contains("prime")) {
    prime = integer_at(doc["prime"], "/prime");
    at_path("/prime", [&] { return Valuation(*prime); });
  }
  RootConfig cfg = at_path("/roots", [&] { return RootConfig(static_cast<int>(genus), std::move(values)); });
  return {std::move(cfg), prime};
}

MetrizedGraph parse_graph(const Json& doc) {
  if (!doc.is_object()) throw InputError("", "expected an object");
  const Json& vs = member(doc, "vertices", "");
  if (!vs.is_array()) throw InputError("/vertices", "expected an array");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    Vertex v;
    v.id = string_at(member(vs[i], "id", path), path + "/id");
    v.genus = vs[i].contains("genus") ? static_cast<int>(integer_at(vs[i]["genus"], path + "/genus")) : 0;
    vertices.push_back(std::move(v));
  }
  const Json& es = member(doc, "edges", "");
  if (!es.is_array()) throw InputError("/edges", "expected an array");
  auto lookup = [&](const std::string& id, const std::string& path) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].id == id) return i;
    }
    throw InputError(path, "unknown vertex id \"" + id + "\"");
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    Edge e;
    e.u = lookup(string_at(member(es[i], "u", path), path + "/u"), path + "/u");
    e.v = lookup(string_at(member(es[i], "v", path), path + "/v"), path + "/v");
    e.length = rat_at(member(es[i], "length", path), path + "/length");
    if (e.length.sign() <= 0) throw InputError(path + "/length", "edge lengths must be positive");
    edges.push_back(std::move(e));
  }
  return at_path("", [&] { return MetrizedGraph(std::move(vertices), std::move(edges)); });
}

std::vector<PlaceReport> parse_places(const Json& doc) {
  if (!doc.is_array()) throw InputError("", "expected an array of place records");
  std::vector<PlaceReport> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    const Json& rec = doc[i];
    PlaceReport p;
    p.label = rec.is_object() && rec.contains("label") ? string_at(rec["label"], path + "/label") : "v" + std::to_string(i);
    p.genus = static_cast<int>(integer_at(member(rec, "genus", path), path + "/genus"));
    p.log_nv = real_at(member(rec, "logNv", path), path + "/logNv");
    p.d = rat_at(member(rec, "d", path), path + "/d");
    p.epsilon = rat_at(member(rec, "epsilon", path), path + "/epsilon");
    p.delta = rat_at(member(rec, "delta", path), path + "/delta");
    p.chi = rat_at(member(rec, "chi", path), path + "/chi");
    if (rec.contains("phi")) p.phi = rat_at(rec["phi"], path + "/phi");
    at_path(path, [&] {
      p.validate();
      return 0;
    });
    out.push_back(std::move(p));
  }
  return out;
}

Json to_json(const RootConfig& cfg) {
  Json roots = Json::array();
  for (const auto& r : cfg.roots()) roots.push_back(r.str());
  Json out{{"genus", cfg.genus()}, {"roots", roots}};
  if (!cfg.note().empty()) out["note"] = cfg.note();
  return out;
}

Json to_json(const MetrizedGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}});
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    es.push_back({{"u", g.vertices()[e.u].id}, {"v", g.vertices()[e.v].id}, {"length", e.length.str()}});
  }
  return {{"vertices", vs}, {"edges", es}};
}

Json to_json(const PlaceReport& p) {
  return {{"label", p.label},       {"genus", p.genus},          {"logNv", decimal(p.log_nv)},
          {"d", p.d.str()},         {"epsilon", p.epsilon.str()}, {"delta", p.delta.str()},
          {"phi", p.phi.str()},     {"chi", p.chi.str()}};
}

std::string decimal(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rat::parse(text).to_double();
  if (text.empty()) throw ValidationError("empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ValidationError("malformed decimal \"" + text + "\"");
  }
  return v;
}

}  // namespace hyperinv
