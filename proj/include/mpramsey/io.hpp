#pragma once

// Instance files (JSON), DOT export and CSV frontier rows.
//
// Instance file, format version 1:
//
//   {
//     "format": "mpramsey-instance",
//     "version": 1,
//     "example": 7, "n": 3,                      (optional)
//     "parts": [5, 3, 1, 1],
//     "coloring": {"encoding": "bitstring", "bits": "0110..."}
//              or {"encoding": "edges", "edges": [[u, v, color], ...]},
//     "named_sets": [{"name": "A", "vertices": [...]}, ...],       (optional)
//     "certificates": [{"type": "vertex_cover", "color": 1,
//                       "vertices": [...], "bound": 2},
//                      {"type": "component_bound", "color": 2, "bound": 6},
//                      {"type": "block_bound", "color": 1, "bound": 5}],   (optional)
//     "claims": [{"color": 1, "kind": "cycle", "size": 6}, ...]     (optional)
//   }
//
// The bitstring has one character per host edge in lexicographic cross-pair
// order: '0' red, '1' blue. Edge lists use the colors 1 (red) and 2 (blue)
// and must mention every host edge exactly once.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpramsey/certificates.hpp"
#include "mpramsey/constructions.hpp"
#include "mpramsey/frontier.hpp"
#include "mpramsey/graph.hpp"

namespace mpramsey {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kFormatName = "mpramsey-instance";

enum class ParseErrorCode {
  malformed = 10,
  unsupported_version = 11,
  invalid_parts = 12,
  length_mismatch = 13,
  unknown_color = 14,
  missing_edge = 15,
  dual_colored_edge = 16,
  same_part_pair = 17,
  invalid_vertex = 18,
  bad_certificate = 19,
};

inline const char* parse_error_name(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::malformed: return "malformed";
    case ParseErrorCode::unsupported_version: return "unsupported-version";
    case ParseErrorCode::invalid_parts: return "invalid-parts";
    case ParseErrorCode::length_mismatch: return "length-mismatch";
    case ParseErrorCode::unknown_color: return "unknown-color";
    case ParseErrorCode::missing_edge: return "missing-edge";
    case ParseErrorCode::dual_colored_edge: return "dual-colored-edge";
    case ParseErrorCode::same_part_pair: return "same-part-pair";
    case ParseErrorCode::invalid_vertex: return "invalid-vertex";
    case ParseErrorCode::bad_certificate: return "bad-certificate";
  }
  return "?";
}

class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, const std::string& what)
      : Error(std::string(parse_error_name(code)) + ": " + what), code_(code) {}
  ParseErrorCode code() const noexcept { return code_; }

 private:
  ParseErrorCode code_;
};

enum class ColoringEncoding { bitstring, edges };

/// In-memory form of an instance file.
struct Instance {
  TwoColoring coloring;
  std::vector<NamedSet> named_sets;
  std::vector<AbsenceCertificate> certificates;
  std::vector<Absence> claims;
  std::optional<int> example;
  std::optional<int> n;

  friend bool operator==(const Instance&, const Instance&) = default;
};

inline Instance to_instance(const ExtremalInstance& e) {
  return Instance{e.coloring, e.named_sets, e.certificates, e.claims, e.example, e.n};
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline int color_code(Color c) { return static_cast<int>(c); }

inline Color color_from_code(const ojson& j) {
  if (!j.is_number_integer()) throw ParseError(ParseErrorCode::unknown_color, "color must be 1 or 2");
  const auto v = j.get<long long>();
  if (v != 1 && v != 2) {
    throw ParseError(ParseErrorCode::unknown_color, "color value " + std::to_string(v));
  }
  return static_cast<Color>(v);
}

inline ojson certificate_json(const AbsenceCertificate& cert) {
  ojson j;
  if (const auto* vc = std::get_if<VertexCover>(&cert)) {
    j["type"] = "vertex_cover";
    j["color"] = color_code(vc->color);
    j["vertices"] = vc->cover;
    j["bound"] = vc->bound;
  } else if (const auto* cb = std::get_if<ComponentBound>(&cert)) {
    j["type"] = "component_bound";
    j["color"] = color_code(cb->color);
    j["bound"] = cb->bound;
  } else {
    const auto& bb = std::get<BlockBound>(cert);
    j["type"] = "block_bound";
    j["color"] = color_code(bb.color);
    j["bound"] = bb.bound;
  }
  return j;
}

template <typename T>
T required(const ojson& j, const char* key, ParseErrorCode code = ParseErrorCode::malformed) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(code, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(code, std::string("field '") + key + "': " + e.what());
  }
}

inline Vertex vertex_in(const MultipartiteHost& host, const ojson& j) {
  if (!j.is_number_integer()) throw ParseError(ParseErrorCode::invalid_vertex, "vertex ids are integers");
  const auto v = j.get<long long>();
  if (v < 0 || v >= host.vertex_count()) {
    throw ParseError(ParseErrorCode::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<Vertex>(v);
}

inline AbsenceCertificate certificate_from_json(const MultipartiteHost& host, const ojson& j) {
  const auto type = required<std::string>(j, "type", ParseErrorCode::bad_certificate);
  if (!j.contains("color")) throw ParseError(ParseErrorCode::bad_certificate, "certificate without color");
  const Color color = color_from_code(j.at("color"));
  const int bound = required<int>(j, "bound", ParseErrorCode::bad_certificate);
  if (bound < 0) throw ParseError(ParseErrorCode::bad_certificate, "negative bound");
  if (type == "vertex_cover") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
      throw ParseError(ParseErrorCode::bad_certificate, "vertex cover without vertex list");
    }
    VertexCover vc{color, {}, bound};
    for (const auto& v : j.at("vertices")) vc.cover.push_back(vertex_in(host, v));
    return vc;
  }
  if (type == "component_bound") return ComponentBound{color, bound};
  if (type == "block_bound") return BlockBound{color, bound};
  throw ParseError(ParseErrorCode::bad_certificate, "unknown certificate type '" + type + "'");
}

}  // namespace detail

inline std::string coloring_bits(const TwoColoring& c) {
  std::string bits;
  bits.reserve(c.colors().size());
  for (Color color : c.colors()) bits.push_back(color == Color::red ? '0' : '1');
  return bits;
}

inline std::string serialize_instance(const Instance& inst,
                                      ColoringEncoding encoding = ColoringEncoding::bitstring) {
  using detail::ojson;
  ojson j;
  j["format"] = kFormatName;
  j["version"] = kFormatVersion;
  if (inst.example) j["example"] = *inst.example;
  if (inst.n) j["n"] = *inst.n;
  const auto& host = inst.coloring.host();
  j["parts"] = std::vector<int>(host.part_sizes().begin(), host.part_sizes().end());
  ojson coloring;
  if (encoding == ColoringEncoding::bitstring) {
    coloring["encoding"] = "bitstring";
    coloring["bits"] = coloring_bits(inst.coloring);
  } else {
    coloring["encoding"] = "edges";
    ojson edges = ojson::array();
    for (std::size_t i = 0; i < host.edge_count(); ++i) {
      const Edge& e = host.edges()[i];
      edges.push_back({e.u, e.v, detail::color_code(inst.coloring.edge_color(i))});
    }
    coloring["edges"] = std::move(edges);
  }
  j["coloring"] = std::move(coloring);
  if (!inst.named_sets.empty()) {
    ojson sets = ojson::array();
    for (const auto& s : inst.named_sets) sets.push_back({{"name", s.name}, {"vertices", s.members}});
    j["named_sets"] = std::move(sets);
  }
  if (!inst.certificates.empty()) {
    ojson certs = ojson::array();
    for (const auto& c : inst.certificates) certs.push_back(detail::certificate_json(c));
    j["certificates"] = std::move(certs);
  }
  if (!inst.claims.empty()) {
    ojson claims = ojson::array();
    for (const auto& a : inst.claims) {
      claims.push_back({{"color", detail::color_code(a.color)}, {"kind", kind_name(a.kind)}, {"size", a.size}});
    }
    j["claims"] = std::move(claims);
  }
  return j.dump(2) + "\n";
}

/// Parses and validates an instance. Every structural problem raises a
/// ParseError with its own code; certificates that are well formed but false
/// load fine (validate() reports them).
inline Instance parse_instance(std::string_view text) {
  using detail::ojson;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorCode::malformed, e.what());
  }
  if (!j.is_object()) throw ParseError(ParseErrorCode::malformed, "top level must be an object");
  if (j.contains("format") && j.at("format") != kFormatName) {
    throw ParseError(ParseErrorCode::malformed, "not an instance file");
  }
  const int version = detail::required<int>(j, "version");
  if (version != kFormatVersion) {
    throw ParseError(ParseErrorCode::unsupported_version, "version " + std::to_string(version));
  }

  HostPtr host;
  try {
    host = build_host(detail::required<std::vector<int>>(j, "parts", ParseErrorCode::invalid_parts));
  } catch (const InvalidArgument& e) {
    throw ParseError(ParseErrorCode::invalid_parts, e.what());
  }

  const auto& cj = j.contains("coloring") ? j.at("coloring") : throw ParseError(ParseErrorCode::malformed, "missing coloring");
  const auto encoding = detail::required<std::string>(cj, "encoding");
  std::vector<Color> colors(host->edge_count(), Color::red);
  if (encoding == "bitstring") {
    const auto bits = detail::required<std::string>(cj, "bits");
    if (bits.size() != host->edge_count()) {
      throw ParseError(ParseErrorCode::length_mismatch, "bitstring has " + std::to_string(bits.size()) +
                                                            " characters, host has " +
                                                            std::to_string(host->edge_count()) + " edges");
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '0') {
        colors[i] = Color::red;
      } else if (bits[i] == '1') {
        colors[i] = Color::blue;
      } else {
        throw ParseError(ParseErrorCode::unknown_color, std::string("bit character '") + bits[i] + "'");
      }
    }
  } else if (encoding == "edges") {
    if (!cj.contains("edges") || !cj.at("edges").is_array()) {
      throw ParseError(ParseErrorCode::malformed, "edge encoding needs an 'edges' array");
    }
    std::vector<int> assigned(host->edge_count(), 0);
    for (const auto& entry : cj.at("edges")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ParseError(ParseErrorCode::malformed, "edge entries are [u, v, color]");
      }
      const Vertex u = detail::vertex_in(*host, entry[0]);
      const Vertex v = detail::vertex_in(*host, entry[1]);
      const Color c = detail::color_from_code(entry[2]);
      if (u == v || !host->adjacent(u, v)) {
        throw ParseError(ParseErrorCode::same_part_pair,
                         "pair " + std::to_string(u) + "," + std::to_string(v) + " is not a host edge");
      }
      const auto idx = host->edge_index(u, v);
      if (assigned[idx] && colors[idx] != c) {
        throw ParseError(ParseErrorCode::dual_colored_edge,
                         "edge " + std::to_string(u) + "," + std::to_string(v) + " has both colors");
      }
      if (assigned[idx]) {
        throw ParseError(ParseErrorCode::dual_colored_edge,
                         "edge " + std::to_string(u) + "," + std::to_string(v) + " listed twice");
      }
      assigned[idx] = 1;
      colors[idx] = c;
    }
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      if (!assigned[i]) {
        const Edge& e = host->edges()[i];
        throw ParseError(ParseErrorCode::missing_edge,
                         "edge " + std::to_string(e.u) + "," + std::to_string(e.v) + " has no color");
      }
    }
  } else {
    throw ParseError(ParseErrorCode::malformed, "unknown coloring encoding '" + encoding + "'");
  }

  Instance inst{TwoColoring(host, std::move(colors)), {}, {}, {}, std::nullopt, std::nullopt};
  if (j.contains("example")) inst.example = detail::required<int>(j, "example");
  if (j.contains("n")) inst.n = detail::required<int>(j, "n");
  if (j.contains("named_sets")) {
    for (const auto& s : j.at("named_sets")) {
      NamedSet set{detail::required<std::string>(s, "name"), {}};
      if (!s.contains("vertices") || !s.at("vertices").is_array()) {
        throw ParseError(ParseErrorCode::malformed, "named set without vertices");
      }
      for (const auto& v : s.at("vertices")) set.members.push_back(detail::vertex_in(*host, v));
      inst.named_sets.push_back(std::move(set));
    }
  }
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) {
      inst.certificates.push_back(detail::certificate_from_json(*host, c));
    }
  }
  if (j.contains("claims")) {
    for (const auto& c : j.at("claims")) {
      if (!c.contains("color")) throw ParseError(ParseErrorCode::malformed, "claim without color");
      const Color color = detail::color_from_code(c.at("color"));
      const auto kind = parse_kind(detail::required<std::string>(c, "kind"));
      if (!kind) throw ParseError(ParseErrorCode::malformed, "unknown structure kind in claim");
      inst.claims.push_back({color, *kind, detail::required<int>(c, "size")});
    }
  }
  return inst;
}

/// Graphviz rendering: one cluster per named set when the named sets
/// partition the vertices, otherwise one cluster per part; red and blue
/// edge classes.
inline std::string export_dot(const TwoColoring& coloring, const std::vector<NamedSet>& named_sets = {}) {
  const auto& host = coloring.host();
  std::vector<NamedSet> clusters;
  {
    std::vector<int> hits(host.vertex_count(), 0);
    for (const auto& s : named_sets) {
      for (Vertex v : s.members) {
        if (host.contains(v)) ++hits[v];
      }
    }
    const bool partition =
        !named_sets.empty() && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    if (partition) {
      clusters = named_sets;
    } else {
      for (int p = 0; p < host.part_count(); ++p) {
        clusters.push_back({"V_" + std::to_string(p + 1), detail::range(host.part_begin(p), host.part_end(p))});
      }
    }
  }
  std::ostringstream out;
  out << "graph coloring {\n";
  out << "  graph [label=\"K_{";
  for (int p = 0; p < host.part_count(); ++p) out << (p ? "," : "") << host.part_size(p);
  out << "}\"];\n";
  out << "  node [shape=circle];\n";
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"" << clusters[c].name << "\";\n";
    for (Vertex v : clusters[c].members) {
      out << "    " << v << " [label=\"" << v << "\\nV_" << host.part_of(v) + 1 << "\"];\n";
    }
    out << "  }\n";
  }
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    const Edge& e = host.edges()[i];
    out << "  " << e.u << " -- " << e.v << " [color=" << color_name(coloring.edge_color(i)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string join_parts(std::span<const int> parts, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(parts[i]);
  }
  return out;
}

inline constexpr const char* kFrontierCsvHeader = "parts,n,target,colorings,failures,witness-file";

/// One frontier CSV row. The parts field is quoted ("3,3"); `n` is the
/// half-size of the target (floor(size/2)) unless given.
inline std::string frontier_csv_row(const VerdictSummary& v, const std::string& witness_file = {},
                                    std::optional<int> n = std::nullopt) {
  std::ostringstream out;
  out << '"' << join_parts(v.part_sizes) << "\"," << n.value_or(v.target.size / 2) << ','
      << v.target.label() << ',' << v.colorings << ',' << v.failures << ',' << witness_file;
  return out.str();
}

}  // namespace mpramsey
