#include "toric/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "toric/errors.hpp"

namespace toric::io {

using nlohmann::json;

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j, const std::string& field) {
  if (!j.is_string())
    throw ValidationError("field " + field + ": rationals must be \"p/q\" strings");
  return rat_from_string(j.get<std::string>());
}

json vertices_json(const Polytope& poly) {
  json verts = json::array();
  for (const MVec& v : poly.vertices()) {
    json coords = json::array();
    for (size_t i = 0; i < v.dim(); ++i) coords.push_back(rat_json(v[i]));
    verts.push_back(std::move(coords));
  }
  return verts;
}

json polytope_obj(const Polytope& poly) {
  json j;
  j["dim"] = poly.dim();
  j["vertices"] = vertices_json(poly);
  return j;
}

json ray_json(const NVec& r) {
  json out = json::array();
  for (size_t i = 0; i < r.dim(); ++i) {
    if (denominator_of(r[i]) != 1) throw Error("ray with non-integral coordinate");
    out.push_back(numerator_of(r[i]).str());
  }
  return out;
}

json fan_obj(const FanDocument& doc) {
  json j;
  j["dimension"] = doc.dimension;
  if (!doc.name.empty()) j["name"] = doc.name;
  json rays = json::array();
  for (const auto& r : doc.rays) {
    json coords = json::array();
    for (const Int& x : r) coords.push_back(x.str());
    rays.push_back(std::move(coords));
  }
  j["rays"] = std::move(rays);
  j["maximal_cones"] = doc.maximal_cones;
  return j;
}

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const Rat r = rat_from_string(s);
    if (denominator_of(r) != 1)
      throw ValidationError("field " + field + ": expected an integer, got \"" + s + "\"");
    return numerator_of(r);
  }
  throw ValidationError("field " + field + ": expected an integer");
}

FanDocument fan_doc_from_obj(const json& j) {
  if (!j.is_object()) throw ValidationError("fan document: expected an object");
  FanDocument doc;
  if (!j.contains("dimension")) throw ValidationError("fan document: missing \"dimension\"");
  doc.dimension = j.at("dimension").get<size_t>();
  if (doc.dimension == 0) throw ValidationError("fan document: dimension must be positive");
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  if (!j.contains("rays")) throw ValidationError("fan document: missing \"rays\"");
  for (const json& ray : j.at("rays")) {
    std::vector<Int> coords;
    for (const json& x : ray) coords.push_back(int_from_json(x, "rays"));
    if (coords.size() != doc.dimension)
      throw ValidationError("fan document: ray of wrong dimension");
    doc.rays.push_back(std::move(coords));
  }
  if (!j.contains("maximal_cones"))
    throw ValidationError("fan document: missing \"maximal_cones\"");
  for (const json& cone : j.at("maximal_cones")) {
    std::vector<size_t> idx;
    for (const json& x : cone) {
      const size_t i = x.get<size_t>();
      if (i >= doc.rays.size())
        throw ValidationError("fan document: cone ray index " + std::to_string(i) +
                              " out of range");
      idx.push_back(i);
    }
    doc.maximal_cones.push_back(std::move(idx));
  }
  return doc;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("document parse error: ") + e.what());
  }
}

}  // namespace

Fan to_fan(const FanDocument& doc) {
  std::vector<NVec> rays;
  for (const auto& r : doc.rays) {
    std::vector<Rat> coords(r.begin(), r.end());
    NVec v{std::move(coords)};
    if (v.is_zero()) throw ValidationError("fan document: zero ray");
    rays.push_back(primitivize(v));
  }
  {
    std::vector<NVec> sorted = rays;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("fan document: duplicate ray after normalization");
  }
  std::vector<Cone> cones;
  for (const auto& idx : doc.maximal_cones) {
    std::vector<NVec> gens;
    for (size_t i : idx) gens.push_back(rays[i]);
    cones.emplace_back(doc.dimension, std::move(gens));
  }
  return Fan::validated(doc.dimension, std::move(cones));
}

FanDocument from_fan(const Fan& fan, std::string name) {
  FanDocument doc;
  doc.dimension = fan.ambient_dim();
  doc.name = std::move(name);
  for (const NVec& r : fan.rays()) {
    std::vector<Int> coords;
    for (size_t i = 0; i < r.dim(); ++i) coords.push_back(numerator_of(r[i]));
    doc.rays.push_back(std::move(coords));
  }
  for (const Cone& c : fan.max_cones()) {
    std::vector<size_t> idx;
    for (const NVec& r : c.rays()) idx.push_back(*fan.ray_index(r));
    doc.maximal_cones.push_back(std::move(idx));
  }
  return doc;
}

DivisorClassOfX to_pair(const PairDocument& doc) {
  if (doc.divisor_coefficients.size() != doc.fan.rays.size())
    throw ValidationError("pair document: one coefficient per ray required");
  FanPtr fan = std::make_shared<Fan>(to_fan(doc.fan));
  std::vector<Rat> class_values(fan->rays().size());
  std::vector<bool> seen(fan->rays().size(), false);
  for (size_t i = 0; i < doc.fan.rays.size(); ++i) {
    std::vector<Rat> coords(doc.fan.rays[i].begin(), doc.fan.rays[i].end());
    const NVec ray = primitivize(NVec{std::move(coords)});
    const auto idx = fan->ray_index(ray);
    if (!idx) throw ValidationError("pair document: coefficient on a ray not in the fan");
    class_values[*idx] = -doc.divisor_coefficients[i];
    seen[*idx] = true;
  }
  for (bool s : seen)
    if (!s) throw ValidationError("pair document: missing coefficient for a fan ray");
  return DivisorClassOfX::checked(std::move(fan), std::move(class_values));
}

std::string fan_to_json(const FanDocument& doc) { return fan_obj(doc).dump(2) + "\n"; }

std::string pair_to_json(const PairDocument& doc) {
  json j;
  j["fan"] = fan_obj(doc.fan);
  if (!doc.name.empty()) j["name"] = doc.name;
  json coeffs;
  for (size_t i = 0; i < doc.divisor_coefficients.size(); ++i)
    coeffs[std::to_string(i)] = rat_json(doc.divisor_coefficients[i]);
  j["class_coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

FanDocument fan_from_json(const std::string& text) { return fan_doc_from_obj(parse(text)); }

PairDocument pair_from_json(const std::string& text, const std::string& base_dir) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("class_coefficients"))
    throw ValidationError("pair document: missing \"class_coefficients\"");
  PairDocument doc;
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  if (!j.contains("fan")) throw ValidationError("pair document: missing \"fan\"");
  if (j.at("fan").is_string()) {
    const std::filesystem::path ref =
        std::filesystem::path(base_dir) / j.at("fan").get<std::string>();
    std::ifstream in(ref);
    if (!in) throw ValidationError("pair document: cannot open fan reference " + ref.string());
    std::stringstream buf;
    buf << in.rdbuf();
    doc.fan = fan_from_json(buf.str());
  } else {
    doc.fan = fan_doc_from_obj(j.at("fan"));
  }
  const json& coeffs = j.at("class_coefficients");
  if (!coeffs.is_object())
    throw ValidationError("pair document: class_coefficients must map ray indices to strings");
  doc.divisor_coefficients.assign(doc.fan.rays.size(), Rat(0));
  std::vector<bool> seen(doc.fan.rays.size(), false);
  for (const auto& [key, value] : coeffs.items()) {
    size_t idx = 0;
    try {
      idx = std::stoul(key);
    } catch (...) {
      throw ValidationError("pair document: bad ray index \"" + key + "\"");
    }
    if (idx >= doc.fan.rays.size())
      throw ValidationError("pair document: ray index " + key + " out of range");
    doc.divisor_coefficients[idx] = rat_from_json(value, "class_coefficients." + key);
    seen[idx] = true;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ValidationError("pair document: missing coefficient for ray " + std::to_string(i));
  return doc;
}

bool json_is_pair(const std::string& text) {
  const json j = parse(text);
  return j.is_object() && j.contains("class_coefficients");
}

std::string polytope_json(const Polytope& poly) { return polytope_obj(poly).dump(2) + "\n"; }

namespace {

json kappa_json_value(const std::optional<int>& kappa) {
  if (!kappa) return "-inf";
  return *kappa;
}

}  // namespace

std::string minimal_model_report_json(const MinimalModelReport& report, uint64_t seed,
                                      const std::string& input_name) {
  json j;
  j["report"] = "minimal-model";
  j["method"] = "puff";
  j["seed"] = seed;
  if (!input_name.empty()) j["input"] = input_name;
  j["sigma"] = fan_obj(from_fan(*report.sigma));
  json k = json::array();
  for (const Rat& v : report.adjoint_on_sigma.values) k.push_back(rat_json(v));
  j["adjoint_values"] = std::move(k);
  j["checks"] = {{"sigma_rays_equal_contributing", report.checks.sigma_rays_equal_contributing},
                 {"k_matches_h", report.checks.k_matches_h},
                 {"k_sigma_in_box", report.checks.k_sigma_in_box},
                 {"nef", report.checks.nef},
                 {"terminal", report.checks.terminal},
                 {"box_preserved", report.checks.box_preserved}};
  j["kappa"] = kappa_json_value(report.kappa);
  json weights = json::array();
  for (const Rat& w : report.epsilon.weights) weights.push_back(rat_json(w));
  j["epsilon"] = {{"weights", std::move(weights)}, {"scale", rat_json(report.epsilon.scale)}};
  j["chamber_signature"] = report.certificate.signature;
  json disc = json::array();
  for (const DiscrepancyEntry& e : report.terminality.entries)
    disc.push_back({{"ray", ray_json(e.ray)},
                    {"discrepancy", rat_json(e.discrepancy)},
                    {"meets_x", e.meets_x}});
  j["discrepancies"] = std::move(disc);
  j["final_polytope"] = polytope_obj(report.adjoint_box);
  return j.dump(2) + "\n";
}

std::string mmp_report_json(const MMPOutcome& outcome, const std::string& input_name) {
  json j;
  j["report"] = "minimal-model";
  j["method"] = "mmp";
  if (!input_name.empty()) j["input"] = input_name;
  switch (outcome.kind) {
    case OutcomeKind::minimal_model: j["outcome"] = "minimal-model"; break;
    case OutcomeKind::mori_fibration: j["outcome"] = "mori-fibration"; break;
    case OutcomeKind::birational_to_projective_space:
      j["outcome"] = "birational-to-projective-space";
      break;
  }
  j["final_fan"] = fan_obj(from_fan(*outcome.final_fan));
  json adjoint = json::array();
  for (const Rat& g : outcome.final_class.values()) adjoint.push_back(rat_json(Rat(1) + g));
  j["final_adjoint_values"] = std::move(adjoint);
  j["kappa"] = kappa_json_value(outcome.kappa);
  j["final_polytope"] = polytope_obj(outcome.final_adjoint_box);

  json trace = json::array();
  for (const MMPStep& s : outcome.trace) {
    json step;
    switch (s.kind) {
      case StepKind::divisorial: step["kind"] = "divisorial"; break;
      case StepKind::flip: step["kind"] = "flip"; break;
      case StepKind::fibration: step["kind"] = "fibration"; break;
    }
    step["adjoint_degree"] = rat_json(s.adjoint_degree);
    json support = json::array();
    for (size_t i = 0; i < s.extremal_class.degrees.size(); ++i)
      if (s.extremal_class.degrees[i] != 0)
        support.push_back({{"ray", ray_json(s.before->rays()[i])},
                           {"coefficient", rat_json(s.extremal_class.degrees[i])}});
    step["extremal_class"] = std::move(support);
    if (s.removed_ray) step["removed_ray"] = ray_json(*s.removed_ray);
    if (s.flip_hinge) {
      step["flip"] = {{"hinge", ray_json(*s.flip_hinge)},
                      {"alpha", rat_json(s.flip_discrepancies->first)},
                      {"alpha_prime", rat_json(s.flip_discrepancies->second)}};
    }
    if (s.fibration) {
      step["fibration"] = {{"fiber_dim", s.fibration->fiber_dim},
                           {"base_dim", s.fibration->base_dim},
                           {"canonical_degree", rat_json(s.fibration->canonical_degree)},
                           {"class_degree", rat_json(s.fibration->class_degree)},
                           {"quotient_fan", fan_obj(from_fan(*s.fibration->quotient_fan))}};
    }
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

ReportEssentials essentials_from_report_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("final_polytope") || !j.contains("kappa"))
    throw ValidationError("report: missing final_polytope or kappa");
  ReportEssentials e;
  e.box_dim = j.at("final_polytope").at("dim").get<int>();
  for (const json& v : j.at("final_polytope").at("vertices")) {
    std::vector<std::string> coords;
    for (const json& c : v) coords.push_back(c.get<std::string>());
    e.box_vertices.push_back(std::move(coords));
  }
  const json& k = j.at("kappa");
  e.kappa = k.is_string() ? k.get<std::string>() : std::to_string(k.get<int>());
  return e;
}

}  // namespace toric::io
