#include "gto/io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gto::io {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const json& doc, const std::set<std::string>& allowed) {
  if (!doc.is_object()) malformed("top-level value must be an object");
  for (const auto& item : doc.items()) {
    if (!allowed.contains(item.key())) malformed("unexpected field \"" + item.key() + "\"");
  }
}

IntVector int_vector(const json& value, const std::string& field) {
  if (!value.is_array()) malformed("\"" + field + "\" must be an array");
  IntVector out;
  for (const auto& x : value) {
    if (!x.is_number_integer() ||
        (x.is_number_unsigned() &&
         x.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))) {
      malformed("\"" + field + "\" must contain only 64-bit integers");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

IntMatrix int_matrix(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    malformed("\"" + field + "\" must be a non-empty array of rows");
  }
  std::vector<IntVector> rows;
  for (const auto& row : value) rows.push_back(int_vector(row, field));
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) malformed("\"" + field + "\" has ragged rows");
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix OrderSpec::matrix() const {
  if (weights) return cyclic_order(*weights).m.matrix();
  return *m;
}

OrderSpec parse_order(std::string_view text) {
  const json doc = parse_json(text);
  require_keys(doc, {"kind", "m", "weights"});
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    malformed("missing string field \"kind\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  OrderSpec spec;
  if (kind == "matrix") {
    if (!doc.contains("m") || doc.contains("weights")) {
      malformed("kind \"matrix\" needs \"m\" and no \"weights\"");
    }
    spec.m = int_matrix(doc["m"], "m");
  } else if (kind == "cyclic") {
    if (!doc.contains("weights") || doc.contains("m")) {
      malformed("kind \"cyclic\" needs \"weights\" and no \"m\"");
    }
    spec.weights = int_vector(doc["weights"], "weights");
  } else {
    malformed("unknown kind \"" + kind + "\"");
  }
  return spec;
}

std::string dump_order(const OrderSpec& spec) {
  std::ostringstream out;
  if (spec.weights) {
    out << "{\n  \"kind\": \"cyclic\",\n  \"weights\": "
        << format_list(*spec.weights) << "\n}\n";
  } else {
    out << "{\n  \"kind\": \"matrix\",\n  \"m\": [\n";
    const IntMatrix& m = *spec.m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      out << "    " << format_list(m.row(i)) << (i + 1 < m.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
  }
  return out.str();
}

MDataSpec parse_mdata(std::string_view text) {
  const json doc = parse_json(text);
  require_keys(doc, {"m", "a", "nu"});
  for (const char* key : {"m", "a", "nu"}) {
    if (!doc.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  }
  MDataSpec spec{int_matrix(doc["m"], "m"), int_vector(doc["a"], "a"), {}};
  for (std::int64_t v : int_vector(doc["nu"], "nu")) {
    if (v < 0) malformed("\"nu\" entries must be non-negative");
    spec.nu.push_back(static_cast<std::size_t>(v));
  }
  return spec;
}

std::string dump_mdata(const MData& md) {
  std::ostringstream out;
  out << "{\n  \"m\": [\n";
  for (std::size_t i = 0; i < md.size(); ++i) {
    out << "    " << format_list(md.m().row(i)) << (i + 1 < md.size() ? ",\n" : "\n");
  }
  IntVector nu(md.nu().images().begin(), md.nu().images().end());
  out << "  ],\n  \"a\": " << format_list(md.a()) << ",\n  \"nu\": "
      << format_list(nu) << "\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

std::string vertex_label(const ExponentVector& v) {
  bool zero = true;
  for (auto x : v) zero = zero && x == 0;
  if (zero) return "0";
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

std::string format_list(std::span<const std::int64_t> values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(values[k]);
  }
  return out + "]";
}

std::string format_matrix(const IntMatrix& m, std::string_view indent) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += indent;
    out += format_list(m.row(i));
    out += "\n";
  }
  return out;
}

std::string to_dot(const Quiver& q) {
  const Quiver c = q.canonical();
  std::ostringstream out;
  out << "digraph V_A {\n";
  for (std::size_t k = 0; k < c.vertices.size(); ++k) {
    out << "  v" << k << " [label=" << quoted(vertex_label(c.vertices[k])) << "];\n";
  }
  for (auto [a, b] : c.arrows) out << "  v" << a << " -> v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string error_object(std::string_view code, std::string_view message,
                         std::span<const std::int64_t> witness) {
  nlohmann::ordered_json obj;
  obj["code"] = std::string(code);
  obj["message"] = std::string(message);
  obj["witness"] = IntVector(witness.begin(), witness.end());
  return obj.dump();
}

}  // namespace gto::io
