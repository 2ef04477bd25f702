#include "nevkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nevkit/errors.hpp"

namespace nevkit {

namespace {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double get_number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw InvalidInput(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

const Json& get_array(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return v;
}

Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

Json square_json(const DyadicSquare& q) { return Json{{"k", q.k}, {"j", q.j}}; }

}  // namespace

Json to_json(const Complex& z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }
Json to_json(const DiskPoint& p) { return Json{{"re", p.re()}, {"im", p.im()}}; }

Json points_to_json(std::span<const DiskPoint> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Json to_json(const HarmonicMajorant& h) {
  Json atoms = Json::array();
  for (const auto& a : h.atoms()) atoms.push_back(Json{{"theta", a.theta}, {"weight", a.weight}});
  return Json{{"constant", h.constant()}, {"atoms", atoms}};
}

Json to_json(const LabeledSequence& seq) {
  Json out{{"points", points_to_json(seq.points())}};
  if (seq.labels()) out["labels"] = *seq.labels();
  if (seq.values()) {
    Json vals = Json::array();
    for (const auto& v : *seq.values()) vals.push_back(to_json(v));
    out["values"] = vals;
  }
  return out;
}

Json to_json(const DividedDifferenceStat& stat) {
  return Json{{"order", stat.order},
              {"sup", number(stat.sup_value)},
              {"log_sup", number(stat.log_sup)},
              {"witness", points_to_json(stat.witness_points)},
              {"witness_indices", index_list(stat.witness)},
              {"tuples", stat.tuples},
              {"majorant", to_json(stat.majorant)}};
}

Json to_json(const PartitionResult& result, const LabeledSequence& input) {
  Json parts = Json::array();
  std::vector<int> labels(input.size(), 0);
  for (std::size_t j = 0; j < result.parts.size(); ++j) {
    parts.push_back(index_list(result.parts[j]));
    for (auto i : result.parts[j]) labels[i] = static_cast<int>(j) + 1;
  }
  Json checks = Json::array();
  for (const auto& c : result.part_checks) {
    Json e{{"separated", c.separated}};
    if (c.violation) e["violation"] = Json::array({c.violation->first, c.violation->second});
    checks.push_back(e);
  }
  return Json{{"parts", parts},
              {"witness", to_json(result.witness)},
              {"verified", result.verified},
              {"part_checks", checks},
              {"sequence", to_json(input.with_labels(labels))}};
}

Json to_json(const Covering& cov) {
  return Json{{"centers", points_to_json(cov.centers)},
              {"radii", cov.radii},
              {"center_part", cov.center_part},
              {"alpha", cov.alpha},
              {"beta", cov.beta},
              {"start_constant", cov.start_constant},
              {"majorant", to_json(cov.majorant)},
              {"assignment", index_list(cov.assignment)}};
}

Json to_json(const CoveringReport& rep) {
  auto check = [](const CoveringCheck& c) {
    Json j{{"passed", c.passed}};
    if (!c.passed) {
      j["detail"] = c.detail;
      j["witness"] = index_list(c.witness);
    }
    return j;
  };
  return Json{{"covers", check(rep.covers)},
              {"radii_bounds", check(rep.radii_bounds)},
              {"gaps", check(rep.gaps)},
              {"one_per_part", check(rep.one_per_part)},
              {"all_passed", rep.all_passed()}};
}

Json to_json(const Counterexample& ce, std::span<const DiskPoint> points) {
  Json values = Json::array();
  for (const auto& v : ce.values) values.push_back(to_json(v));
  Json entries = Json::array();
  for (const auto& e : ce.entries) {
    entries.push_back(Json{{"alpha", e.alpha},
                           {"point", to_json(points[e.alpha])},
                           {"square", square_json(e.square)},
                           {"radius", e.radius},
                           {"nearest", index_list(e.nearest)},
                           {"order_n_minus_1", number(e.order_n_minus_1)},
                           {"order_n", number(e.order_n)},
                           {"blowup_target", number(e.blowup_target)}});
  }
  return Json{{"n", ce.n}, {"selected", index_list(ce.selected)}, {"values", values}, {"entries", entries}};
}

Json to_json(const BaseInterpolant& g) {
  Json vals = Json::array();
  for (const auto& v : g.values()) vals.push_back(to_json(v));
  Json lo = Json::array();
  for (const auto& v : g.values_lo()) lo.push_back(to_json(v));
  return Json{{"nodes", points_to_json(g.nodes())},
              {"values", vals},
              {"values_lo", lo},
              {"growth_bound", number(g.growth_bound())}};
}

Json to_json(const InterpolantChain& chain) {
  Json parts = Json::array();
  for (const auto& p : chain.parts()) parts.push_back(points_to_json(p));
  Json products = Json::array();
  for (const auto& b : chain.blaschke_factors()) products.push_back(points_to_json(b.zeros()));
  Json stages = Json::array();
  for (const auto& g : chain.stages()) stages.push_back(to_json(g));
  return Json{{"parts", parts},
              {"blaschke_factors", products},
              {"stages", stages},
              {"local_majorant", to_json(chain.local_majorant())}};
}

Json to_json(const StageBoundReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(Json{{"stage", e.stage},
                           {"node", e.node},
                           {"abs_value", number(e.abs_value)},
                           {"log_bound", number(e.log_bound)},
                           {"flagged", e.flagged},
                           {"far_pair", e.far_pair}});
  }
  return Json{{"flagged", rep.flagged}, {"far_pairs", rep.far_pairs}, {"entries", entries}};
}

Json to_json(const InclusionBound& bound) {
  return Json{{"majorant", to_json(bound.majorant)},
              {"constant", number(bound.constant)},
              {"order_n_sup", number(bound.order_n_sup)},
              {"worst_base", index_list(bound.worst_base)}};
}

Complex complex_from_json(const Json& j) { return {get_number(j, "re"), get_number(j, "im")}; }

DiskPoint point_from_json(const Json& j) { return DiskPoint(get_number(j, "re"), get_number(j, "im")); }

std::vector<DiskPoint> points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("point list must be an array");
  std::vector<DiskPoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

HarmonicMajorant majorant_from_json(const Json& j) {
  std::vector<PoissonAtom> atoms;
  if (j.contains("atoms")) {
    for (const auto& a : get_array(j, "atoms")) atoms.push_back({get_number(a, "theta"), get_number(a, "weight")});
  }
  return HarmonicMajorant(get_number(j, "constant"), std::move(atoms));
}

LabeledSequence sequence_from_json(const Json& j) {
  auto points = points_from_json(get_array(j, "points"));
  std::optional<std::vector<int>> labels;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    labels.emplace();
    for (const auto& l : get_array(j, "labels")) {
      if (!l.is_number_integer()) throw InvalidInput("labels must be integers");
      labels->push_back(l.get<int>());
    }
  }
  std::optional<std::vector<Complex>> values;
  if (j.contains("values") && !j.at("values").is_null()) {
    values.emplace();
    for (const auto& v : get_array(j, "values")) values->push_back(complex_from_json(v));
  }
  return LabeledSequence(std::move(points), std::move(labels), std::move(values));
}

Covering covering_from_json(const Json& j) {
  Covering cov;
  cov.centers = points_from_json(get_array(j, "centers"));
  for (const auto& r : get_array(j, "radii")) cov.radii.push_back(r.get<double>());
  if (j.contains("center_part")) {
    for (const auto& p : get_array(j, "center_part")) cov.center_part.push_back(p.get<int>());
  }
  cov.alpha = get_number(j, "alpha");
  cov.beta = get_number(j, "beta");
  if (j.contains("start_constant")) cov.start_constant = get_number(j, "start_constant");
  cov.majorant = majorant_from_json(field(j, "majorant"));
  for (const auto& a : get_array(j, "assignment")) cov.assignment.push_back(a.get<std::size_t>());
  if (cov.radii.size() != cov.centers.size()) throw InvalidInput("covering: one radius per center");
  return cov;
}

InterpolantChain chain_from_json(const Json& j) {
  std::vector<std::vector<DiskPoint>> parts;
  for (const auto& p : get_array(j, "parts")) parts.push_back(points_from_json(p));
  std::vector<BaseInterpolant> stages;
  for (const auto& s : get_array(j, "stages")) {
    std::vector<Complex> vals;
    for (const auto& v : get_array(s, "values")) vals.push_back(complex_from_json(v));
    std::vector<Complex> lo;
    if (s.contains("values_lo")) {
      for (const auto& v : get_array(s, "values_lo")) lo.push_back(complex_from_json(v));
    }
    stages.emplace_back(points_from_json(get_array(s, "nodes")), std::move(vals), std::move(lo));
  }
  return InterpolantChain(std::move(parts), std::move(stages), majorant_from_json(field(j, "local_majorant")));
}

MajorantGrid grid_from_json(const Json& j) {
  MajorantGrid g;
  for (const auto& c : get_array(j, "constants")) g.constants.push_back(c.get<double>());
  if (j.contains("atom_angles")) {
    for (const auto& a : get_array(j, "atom_angles")) g.atom_angles.push_back(a.get<double>());
  }
  if (j.contains("atom_weights")) {
    for (const auto& w : get_array(j, "atom_weights")) g.atom_weights.push_back(w.get<double>());
  }
  return g;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

}  // namespace nevkit
