#include "tightspan/json_io.hpp"

#include <algorithm>

namespace tightspan {

OrderedJson rat_to_json(const Rat& value) {
  if (rat_is_integer(value) && value.get_num().fits_slong_p()) {
    return OrderedJson(value.get_num().get_si());
  }
  return OrderedJson(rat_to_string(value));
}

Rat rat_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rat(static_cast<long>(value.get<long long>()));
  if (value.is_string()) return rat_from_string(value.get<std::string>());
  throw Error(Error::Kind::InvalidInput, "expected an integer or a 'p/q' string");
}

OrderedJson function_to_json(const MetricFunction& f) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& v : f) arr.push_back(rat_to_json(v));
  return arr;
}

OrderedJson violations_to_json(const std::vector<Violation>& violations) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& v : violations) {
    OrderedJson item;
    switch (v.kind) {
      case Violation::Kind::NonSquare: item["kind"] = "NonSquare"; break;
      case Violation::Kind::NegativeEntry: item["kind"] = "NegativeEntry"; break;
      case Violation::Kind::NonzeroDiagonal: item["kind"] = "NonzeroDiagonal"; break;
      case Violation::Kind::ZeroDistance: item["kind"] = "ZeroDistance"; break;
      case Violation::Kind::AsymmetricPair: item["kind"] = "AsymmetricPair"; break;
      case Violation::Kind::TriangleViolation: item["kind"] = "TriangleViolation"; break;
    }
    if (v.x >= 0) item["x"] = v.x;
    if (v.y >= 0) item["y"] = v.y;
    if (v.via >= 0) item["via"] = v.via;
    item["detail"] = v.describe();
    arr.push_back(item);
  }
  return arr;
}

FinMetric metric_from_json(const nlohmann::json& doc) {
  if (!doc.contains("distances") || !doc["distances"].is_array()) {
    throw Error(Error::Kind::InvalidInput, "metric document needs a 'distances' matrix");
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : doc["distances"]) {
    rows.emplace_back();
    for (const auto& entry : row) rows.back().push_back(rat_from_json(entry));
  }
  std::vector<std::string> labels;
  if (doc.contains("points")) {
    for (const auto& p : doc["points"]) labels.push_back(p.get<std::string>());
  }
  auto validation = validate_metric(rows, std::move(labels));
  if (!validation.ok()) throw MetricRejected(validation.violations);
  return std::move(*validation.metric);
}

Graph graph_from_json(const nlohmann::json& doc) {
  Graph g;
  if (!doc.contains("vertices") || !doc.contains("edges")) {
    throw Error(Error::Kind::InvalidInput, "graph document needs 'vertices' and 'edges'");
  }
  if (doc["vertices"].is_number_integer()) {
    g.n = doc["vertices"].get<int>();
  } else if (doc["vertices"].is_array()) {
    for (const auto& label : doc["vertices"]) g.labels.push_back(label.get<std::string>());
    g.n = static_cast<int>(g.labels.size());
  } else {
    throw Error(Error::Kind::InvalidInput, "'vertices' must be a count or a label list");
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(Error::Kind::InvalidInput, "edges must be [i,j] pairs");
    }
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  g.validate();
  return g;
}

FinMetric space_from_json(const nlohmann::json& doc) {
  if (doc.contains("distances")) return metric_from_json(doc);
  if (doc.contains("edges")) return graph_metric(graph_from_json(doc)).metric;
  throw Error(Error::Kind::InvalidInput, "document is neither a metric nor a graph");
}

std::vector<Isometry> subgroup_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object() && doc.contains("subgroup")) list = &doc["subgroup"];
  if (!list->is_array()) {
    throw Error(Error::Kind::InvalidInput, "subgroup document must be a list of permutations");
  }
  std::vector<Isometry> out;
  for (const auto& perm : *list) {
    Isometry p;
    for (const auto& image : perm) p.push_back(image.get<int>());
    out.push_back(std::move(p));
  }
  return out;
}

OrderedJson complex_to_json(const HullComplex& complex) {
  OrderedJson doc;
  OrderedJson verts = OrderedJson::array();
  for (size_t i = 0; i < complex.vertices.size(); ++i) {
    OrderedJson v;
    v["id"] = i;
    v["values"] = function_to_json(complex.vertices[i]);
    verts.push_back(std::move(v));
  }
  doc["vertices"] = std::move(verts);

  OrderedJson cells = OrderedJson::array();
  for (size_t i = 0; i < complex.cells.size(); ++i) {
    const Cell& cell = complex.cells[i];
    OrderedJson c;
    c["id"] = i;
    c["dim"] = cell.dim;
    c["vertex_ids"] = cell.vertex_ids;
    OrderedJson pairs = OrderedJson::array();
    for (const auto& [x, y] : cell.admissible.pairs) pairs.push_back({x, y});
    c["admissible_pairs"] = std::move(pairs);
    c["isometry_class"] =
        complex.cell_class.empty() ? std::string() : complex.cell_class[i];
    cells.push_back(std::move(c));
  }
  doc["cells"] = std::move(cells);

  OrderedJson faces = OrderedJson::array();
  for (const auto& [child, parent] : complex.face_pairs) faces.push_back({child, parent});
  doc["faces"] = std::move(faces);
  return doc;
}

OrderedJson subdivision_to_json(const Subdivision& sub) {
  OrderedJson doc;
  OrderedJson barys = OrderedJson::array();
  for (const auto& b : sub.barycenters) barys.push_back(function_to_json(b));
  doc["barycenters"] = std::move(barys);
  OrderedJson simplices = OrderedJson::array();
  for (size_t s = 0; s < sub.simplices.size(); ++s) {
    OrderedJson item;
    item["cells"] = sub.simplices[s];
    item["maximal"] = sub.maximal[s] != 0;
    simplices.push_back(std::move(item));
  }
  doc["simplices"] = std::move(simplices);
  return doc;
}

OrderedJson pmap_report_to_json(const PMapReport& report) {
  OrderedJson doc;
  doc["result"] = function_to_json(report.result);
  doc["iterations"] = report.iterations;
  doc["converged_exactly"] = report.converged_exactly;
  doc["residual"] = rat_to_json(report.residual);
  return doc;
}

OrderedJson action_report_to_json(const ActionReport& report) {
  OrderedJson doc;
  doc["group_order"] = report.group_order;
  OrderedJson orbits = OrderedJson::array();
  for (const auto& orbit : report.cell_orbits) {
    OrderedJson o;
    o["dim"] = orbit.dim;
    o["representative_cell"] = orbit.representative_cell;
    o["size"] = orbit.size;
    o["stabilizer_order"] = orbit.stabilizer_order;
    orbits.push_back(std::move(o));
  }
  doc["cell_orbits"] = std::move(orbits);
  OrderedJson simplex = OrderedJson::array();
  for (const auto& [dim, count] : report.simplex_orbits) {
    simplex.push_back({{"dim", dim}, {"orbits", count}});
  }
  doc["subdivision_orbits"] = std::move(simplex);
  doc["simplicial_rigidity"] = report.simplicial_rigidity;
  return doc;
}

namespace {

// decimal rendering for half-integer OFF coordinates
std::string off_coord(const Rat& v) {
  Rat doubled = v * 2;
  long twice = rat_to_long(doubled);
  std::string out = std::to_string(twice / 2);
  if (twice % 2 != 0) {
    if (twice < 0 && twice / 2 == 0) out = "-" + out;
    out += ".5";
  } else {
    out += ".0";
  }
  return out;
}

// exact angular order around the centroid of 2d points
struct PlanarPoint {
  Rat x, y;
};

int half_plane(const PlanarPoint& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; }

bool angle_less(const PlanarPoint& a, const PlanarPoint& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  Rat cross = a.x * b.y - a.y * b.x;
  return cross > 0;
}

}  // namespace

std::string complex_to_off(const HullComplex& complex) {
  std::vector<std::vector<std::string>> polygons;  // coordinates per 2-cell
  std::vector<std::string> comments;
  Rat offset_x = 0;
  int vertex_total = 0;
  for (size_t ci = 0; ci < complex.cells.size(); ++ci) {
    const Cell& cell = complex.cells[ci];
    if (cell.dim != 2) continue;
    PolytopeSystem sys = cell_system(complex, static_cast<int>(ci));
    // anchor at the first vertex so all emitted coordinates are half-integers
    std::vector<Rat> anchor = sys.coords(complex.vertices[cell.vertex_ids.front()]);
    std::vector<PlanarPoint> pts;
    PlanarPoint centroid{0, 0};
    Rat min_x = 0, max_x = 0;
    for (int vid : cell.vertex_ids) {
      auto t = sys.coords(complex.vertices[vid]);
      pts.push_back({t[0] - anchor[0], t[1] - anchor[1]});
      centroid.x += pts.back().x;
      centroid.y += pts.back().y;
      min_x = std::min(min_x, pts.back().x);
      max_x = std::max(max_x, pts.back().x);
    }
    centroid.x /= static_cast<long>(pts.size());
    centroid.y /= static_cast<long>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const PlanarPoint& a, const PlanarPoint& b) {
      return angle_less({a.x - centroid.x, a.y - centroid.y},
                        {b.x - centroid.x, b.y - centroid.y});
    });
    std::vector<std::string> coords;
    for (const auto& p : pts) {
      coords.push_back(off_coord(p.x - min_x + offset_x) + " " + off_coord(p.y) + " 0.0");
    }
    offset_x += max_x - min_x + 1;
    vertex_total += static_cast<int>(coords.size());
    comments.push_back("# cell " + std::to_string(ci) + " class " +
                       (complex.cell_class.empty() ? "?" : complex.cell_class[ci]));
    polygons.push_back(std::move(coords));
  }
  std::string out = "OFF\n";
  out += std::to_string(vertex_total) + " " + std::to_string(polygons.size()) + " 0\n";
  for (size_t p = 0; p < polygons.size(); ++p) {
    out += comments[p] + "\n";
    for (const auto& c : polygons[p]) out += c + "\n";
  }
  int base = 0;
  for (const auto& poly : polygons) {
    out += std::to_string(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) out += " " + std::to_string(base + i);
    out += "\n";
    base += static_cast<int>(poly.size());
  }
  return out;
}

std::string complex_to_csv(const HullComplex& complex) {
  std::string out = "cell_id,dim,isometry_class,vertex_count,vertex_ids\n";
  for (size_t i = 0; i < complex.cells.size(); ++i) {
    const Cell& cell = complex.cells[i];
    out += std::to_string(i) + "," + std::to_string(cell.dim) + "," +
           (complex.cell_class.empty() ? "" : complex.cell_class[i]) + "," +
           std::to_string(cell.vertex_ids.size()) + ",";
    for (size_t v = 0; v < cell.vertex_ids.size(); ++v) {
      if (v) out += " ";
      out += std::to_string(cell.vertex_ids[v]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace tightspan
