#include "propa/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "propa/rational.hpp"

namespace propa {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw validation_error(std::string("not valid JSON: ") + err.what());
  }
}

// Typed field access that turns nlohmann's exceptions into validation errors
// naming the offending field.
template <typename T>
T field(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw validation_error(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw validation_error(std::string("field '") + key + "' has the wrong type");
  }
}

Json space_json(const FiniteMetricSpace& space) {
  Json doc;
  switch (space.kind()) {
    case SpaceKind::grid:
      doc["kind"] = "grid";
      doc["dims"] = space.grid_dims();
      break;
    case SpaceKind::tree:
      doc["kind"] = "tree";
      doc["arity"] = space.tree_arity();
      doc["depth"] = space.tree_depth();
      break;
    case SpaceKind::graph: {
      doc["kind"] = "graph";
      doc["points"] = space.size();
      Json edges = Json::array();
      for (const auto& [a, b] : space.edges()) edges.push_back(Json::array({a, b}));
      doc["edges"] = std::move(edges);
      break;
    }
  }
  return doc;
}

FiniteMetricSpace space_from_json(const Json& doc) {
  if (!doc.is_object()) throw validation_error("space document must be a JSON object");
  const auto kind = field<std::string>(doc, "kind");
  if (kind == "grid") {
    return grid_space(field<std::vector<int>>(doc, "dims"));
  }
  if (kind == "tree") {
    return tree_space(field<int>(doc, "arity"), field<int>(doc, "depth"));
  }
  if (kind == "graph") {
    const auto points = field<std::size_t>(doc, "points");
    const auto pairs = field<std::vector<std::vector<PointId>>>(doc, "edges");
    std::vector<std::pair<PointId, PointId>> edges;
    edges.reserve(pairs.size());
    for (const auto& pair : pairs) {
      if (pair.size() != 2) {
        throw validation_error("field 'edges' must hold [a, b] pairs");
      }
      edges.emplace_back(pair[0], pair[1]);
    }
    return from_graph(points, std::move(edges));
  }
  throw validation_error("unknown space kind '" + kind + "'");
}

Json cover_json(const Cover& cover) {
  Json doc;
  doc["elements"] = cover.elements;
  doc["basepoints"] = cover.basepoints;
  return doc;
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string space_doc(const FiniteMetricSpace& space) { return dump(space_json(space)); }

FiniteMetricSpace parse_space_doc(const std::string& text) {
  return space_from_json(parse_json(text));
}

std::string cover_doc(const FiniteMetricSpace& space, const Cover& cover) {
  Json doc;
  doc["space"] = space_json(space);
  doc.update(cover_json(cover));
  return dump(doc);
}

std::pair<FiniteMetricSpace, Cover> parse_cover_doc(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw validation_error("cover document must be a JSON object");
  if (!doc.contains("space")) throw validation_error("cover document lacks its 'space' field");
  FiniteMetricSpace space = space_from_json(doc.at("space"));
  Cover cover;
  cover.elements = field<std::vector<std::vector<PointId>>>(doc, "elements");
  if (doc.contains("basepoints")) {
    cover.basepoints = field<std::vector<PointId>>(doc, "basepoints");
  } else {
    cover.basepoints = choose_basepoints(space, cover.elements);
  }
  validate_cover(space, cover);
  return {std::move(space), std::move(cover)};
}

std::string stats_doc(const CoverStats& stats) {
  Json doc;
  doc["multiplicity"] = stats.multiplicity;
  doc["mesh"] = stats.mesh;
  doc["ball_lebesgue_global"] = stats.ball_lebesgue_global;
  doc["per_point_min_location"] = stats.min_location;
  return dump(doc);
}

std::string witness_doc(const WitnessReport& report) {
  Json doc;
  doc["n"] = report.params.n;
  doc["R"] = report.params.R;
  doc["m"] = report.multiplicity;
  doc["mesh"] = report.mesh;
  doc["ball_lebesgue_global"] = report.ball_lebesgue_global;
  doc["bound_audited"] = report.bound_audited;
  doc["measured_sup_eta"] = to_fraction_string(report.measured_sup_eta);
  doc["measured_sup_zeta"] = to_fraction_string(report.measured_sup_zeta);
  doc["bound_final"] = format_real(report.bound_final);
  Json pair;
  pair["x"] = report.worst_x;
  pair["y"] = report.worst_y;
  pair["eta_dist"] = to_fraction_string(report.worst_eta_dist);
  pair["zeta_dist"] = to_fraction_string(report.worst_zeta_dist);
  if (report.worst_chain) {
    pair["chain_bound"] = to_fraction_string(*report.worst_chain);
  } else {
    pair["chain_bound"] = nullptr;
  }
  doc["worst_pair"] = std::move(pair);
  doc["support_radius"] = report.support_radius;
  if (report.bound_audited) {
    doc["nesting_ok"] = report.nesting_ok;
  } else {
    doc["nesting_ok"] = nullptr;
  }
  doc["integer_scaling_ok"] = report.integer_scaling_ok;
  return dump(doc);
}

std::string dim_doc(const DimEstimate& estimate) {
  Json doc;
  doc["lambda"] = estimate.lambda;
  doc["mesh_cap"] = estimate.mesh_cap;
  if (estimate.upper) {
    doc["upper"] = *estimate.upper;
  } else {
    doc["upper"] = nullptr;
  }
  doc["surrogate"] = estimate.surrogate;
  if (estimate.exact) doc["exact"] = *estimate.exact;
  if (estimate.witness_cover) {
    doc["witness_cover"] = cover_json(*estimate.witness_cover);
  } else {
    doc["witness_cover"] = nullptr;
  }
  return dump(doc);
}

std::string bound_curve_csv(const std::vector<BoundCurveRow>& rows) {
  std::string out = "n,m,bound,measured_sup_eta,measured_sup_zeta,sup_pair_x,sup_pair_y\n";
  for (const BoundCurveRow& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.m) + "," + format_real(row.bound) +
           "," + to_fraction_string(row.measured_sup_eta) + "," +
           to_fraction_string(row.measured_sup_zeta) + "," + std::to_string(row.sup_pair_x) + "," +
           std::to_string(row.sup_pair_y) + "\n";
  }
  return out;
}

FiniteMetricSpace parse_graph_edge_list(const std::string& text, std::size_t point_budget) {
  std::istringstream in(text);
  std::string line;
  long line_number = 0;
  bool have_count = false;
  std::size_t points = 0;
  std::vector<std::pair<PointId, PointId>> edges;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_count) {
      long long count = -1;
      if (!(fields >> count) || count < 1) {
        throw validation_error("line " + std::to_string(line_number) +
                               ": expected a positive vertex count");
      }
      std::string extra;
      if (fields >> extra) {
        throw validation_error("line " + std::to_string(line_number) +
                               ": unexpected trailing content after the vertex count");
      }
      points = static_cast<std::size_t>(count);
      have_count = true;
      continue;
    }
    long long a = -1;
    long long b = -1;
    if (!(fields >> a >> b) || a < 0 || b < 0 ||
        a > static_cast<long long>(UINT32_MAX) || b > static_cast<long long>(UINT32_MAX)) {
      throw validation_error("line " + std::to_string(line_number) +
                             ": expected an edge as two vertex ids");
    }
    std::string extra;
    if (fields >> extra) {
      throw validation_error("line " + std::to_string(line_number) +
                             ": unexpected trailing content after the edge");
    }
    edges.emplace_back(static_cast<PointId>(a), static_cast<PointId>(b));
  }
  if (!have_count) throw validation_error("graph file has no vertex count line");
  return from_graph(points, std::move(edges), point_budget);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw validation_error("failed writing output file '" + path + "'");
}

}  // namespace propa
