// JSON serialization for quivers, dimension vectors and representations,
// DOT export for fixed-point components, and command-line dimension-vector
// parsing. Formats:
//   quiver:         {"vertices":["i","j"],
//                    "arrows":[{"id":"a","src":"i","tgt":"j"}, ...]}
//   dim vector:     {"i": 4, "j": 1}
//   representation: {"field":"Q"|"Fp:5", "quiver":{...}, "dims":{...},
//                    "matrices":{"a":[["0","1/2"],["1","0"]], ...}}
// Arrow order in the file defines the arrow ordering.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qmod/covering.hpp"
#include "qmod/euler.hpp"
#include "qmod/representations.hpp"

namespace qmod {

inline Quiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw std::invalid_argument("quiver json: need 'vertices' and 'arrows'");
  std::vector<std::string> labels;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw std::invalid_argument("quiver json: vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = i + 1; k < labels.size(); ++k)
      if (labels[i] == labels[k])
        throw std::invalid_argument("quiver json: duplicate vertex '" + labels[i] + "'");
  auto vertex_of = [&](const std::string& name, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("quiver json: " + where + ": unknown vertex '" + name + "'");
  };
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_ids;
  for (const auto& a : j.at("arrows")) {
    const std::string id = a.at("id").get<std::string>();
    for (const std::string& seen : arrow_ids)
      if (seen == id) throw std::invalid_argument("quiver json: duplicate arrow '" + id + "'");
    arrow_ids.push_back(id);
    arrows.push_back({vertex_of(a.at("src").get<std::string>(), "arrow '" + id + "'"),
                      vertex_of(a.at("tgt").get<std::string>(), "arrow '" + id + "'"), id});
  }
  return Quiver(std::move(labels), std::move(arrows));
}

inline nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = q.vertex_labels();
  j["arrows"] = nlohmann::json::array();
  for (const Arrow& a : q.arrows())
    j["arrows"].push_back({{"id", a.label},
                           {"src", q.vertex_label(a.src)},
                           {"tgt", q.vertex_label(a.tgt)}});
  return j;
}

inline DimVector dimvector_from_json(const Quiver& q, const nlohmann::json& j) {
  DimVector d = DimVector::zero(q.num_vertices());
  for (const auto& [key, value] : j.items()) {
    const int v = q.vertex_by_label(key);
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      throw std::invalid_argument("dim vector json: entry '" + key + "' must be a nonnegative integer");
    d[v] = value.get<std::int64_t>();
  }
  return d;
}

inline nlohmann::json dimvector_to_json(const Quiver& q, const DimVector& d) {
  nlohmann::json j = nlohmann::json::object();
  for (int v = 0; v < q.num_vertices(); ++v) j[q.vertex_label(v)] = d[v];
  return j;
}

/// Accepts "4" or "1,1,2" (entries in the file's vertex order) or the named
/// form "i=1,j=2" (unnamed vertices default to 0).
inline DimVector parse_dimvector(const Quiver& q, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto to_entry = [&](const std::string& s) -> std::int64_t {
    std::size_t pos = 0;
    std::int64_t v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("dim vector: bad entry '" + s + "'");
    }
    if (pos != s.size() || v < 0)
      throw std::invalid_argument("dim vector: bad entry '" + s + "'");
    return v;
  };
  DimVector d = DimVector::zero(q.num_vertices());
  if (text.find('=') != std::string::npos) {
    for (const std::string& part : parts) {
      const auto eq = part.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("dim vector: expected label=value in '" + part + "'");
      d[q.vertex_by_label(part.substr(0, eq))] = to_entry(part.substr(eq + 1));
    }
    return d;
  }
  if (static_cast<int>(parts.size()) != q.num_vertices())
    throw std::invalid_argument("dim vector: expected " + std::to_string(q.num_vertices()) +
                                " entries, got " + std::to_string(parts.size()));
  for (int v = 0; v < q.num_vertices(); ++v) d[v] = to_entry(parts[v]);
  return d;
}

inline FieldTag field_from_text(const std::string& text) {
  if (text == "Q") return FieldTag{};
  if (text.rfind("Fp:", 0) == 0) {
    const std::int64_t p = std::stoll(text.substr(3));
    if (p < 2) throw std::invalid_argument("field: prime must be >= 2");
    return FieldTag{p};
  }
  throw std::invalid_argument("field: expected 'Q' or 'Fp:<prime>', got '" + text + "'");
}

inline Representation representation_from_json(const nlohmann::json& j) {
  const FieldTag field = field_from_text(j.at("field").get<std::string>());
  Quiver q = quiver_from_json(j.at("quiver"));
  DimVector d = dimvector_from_json(q, j.at("dims"));
  Representation r = Representation::zero(q, d, field);
  const auto& mats = j.at("matrices");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const std::string& id = q.arrow(a).label;
    if (!mats.contains(id))
      throw std::invalid_argument("representation json: missing matrix for arrow '" + id + "'");
    const auto& rows = mats.at(id);
    if (static_cast<int>(rows.size()) != r.x[a].rows())
      throw std::invalid_argument("representation json: wrong row count for arrow '" + id + "'");
    for (int row = 0; row < r.x[a].rows(); ++row) {
      if (static_cast<int>(rows[row].size()) != r.x[a].cols())
        throw std::invalid_argument("representation json: wrong column count for arrow '" + id +
                                    "'");
      for (int col = 0; col < r.x[a].cols(); ++col)
        r.x[a].at(row, col) = Scalar::parse(field, rows[row][col].get<std::string>());
    }
  }
  r.check_shapes();
  return r;
}

inline nlohmann::json representation_to_json(const Representation& r) {
  nlohmann::json j;
  j["field"] = r.field.text();
  j["quiver"] = quiver_to_json(r.q);
  j["dims"] = dimvector_to_json(r.q, r.d);
  nlohmann::json mats = nlohmann::json::object();
  for (int a = 0; a < r.q.num_arrows(); ++a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 0; row < r.x[a].rows(); ++row) {
      nlohmann::json cols = nlohmann::json::array();
      for (int col = 0; col < r.x[a].cols(); ++col) cols.push_back(r.x[a].at(row, col).str());
      rows.push_back(cols);
    }
    mats[r.q.arrow(a).label] = rows;
  }
  j["matrices"] = mats;
  return j;
}

/// DOT rendering of a component: vertices "i@residue:dim", edges labeled by
/// the covered base arrow (label, not color, so plain-text diffs work).
inline std::string component_dot(const Component& c) {
  std::string out = "digraph component {\n";
  for (int v = 0; v < c.quiver.num_vertices(); ++v) {
    out += "  \"" + c.quiver.vertex_label(v) + "\" [label=\"" + c.quiver.vertex_label(v) + ":" +
           std::to_string(c.dims[v]) + "\"];\n";
  }
  for (int e = 0; e < c.quiver.num_arrows(); ++e) {
    const Arrow& a = c.quiver.arrow(e);
    out += "  \"" + c.quiver.vertex_label(a.src) + "\" -> \"" + c.quiver.vertex_label(a.tgt) +
           "\" [label=\"" + c.base_quiver.arrow(c.arrow_base[e]).label + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json component_summary_json(const Component& c) {
  nlohmann::json j;
  j["nu"] = c.nu.v;
  j["support_size"] = c.quiver.num_vertices();
  j["dims"] = c.dims.v;
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < c.quiver.num_vertices(); ++v) verts.push_back(c.quiver.vertex_label(v));
  j["vertices"] = verts;
  return j;
}

inline nlohmann::json trace_to_json(const EulerTrace& t) {
  nlohmann::json j;
  j["d"] = t.d.v;
  j["chi"] = t.chi;
  switch (t.kind) {
    case EulerTrace::Kind::empty: j["kind"] = "empty"; break;
    case EulerTrace::Kind::base_case: j["kind"] = "single-cycle"; break;
    case EulerTrace::Kind::recursion: j["kind"] = "recursion"; break;
  }
  if (t.kind == EulerTrace::Kind::recursion) {
    nlohmann::json children = nlohmann::json::array();
    for (const auto& [comp, child] : t.children) {
      nlohmann::json entry;
      entry["component"] = component_summary_json(comp);
      entry["node"] = trace_to_json(child);
      children.push_back(entry);
    }
    j["children"] = children;
  }
  return j;
}

inline std::string trace_dot(const EulerTrace& t) {
  std::string out = "digraph trace {\n";
  int counter = 0;
  auto rec = [&](auto&& self, const EulerTrace& node) -> int {
    const int id = counter++;
    std::string dims = "(";
    for (int i = 0; i < node.d.size(); ++i) {
      if (i) dims += ",";
      dims += std::to_string(node.d[i]);
    }
    dims += ")";
    const char* kind = node.kind == EulerTrace::Kind::empty
                           ? "empty"
                           : node.kind == EulerTrace::Kind::base_case ? "cycle" : "sum";
    out += "  n" + std::to_string(id) + " [label=\"d=" + dims +
           " chi=" + std::to_string(node.chi) + " " + kind + "\"];\n";
    for (const auto& [comp, child] : node.children) {
      const int cid = self(self, child);
      std::string nu = "(";
      for (int i = 0; i < comp.nu.size(); ++i) {
        if (i) nu += ",";
        nu += std::to_string(comp.nu[i]);
      }
      nu += ")";
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) + " [label=\"nu=" + nu +
             "\"];\n";
    }
    return id;
  };
  rec(rec, t);
  out += "}\n";
  return out;
}

}  // namespace qmod
