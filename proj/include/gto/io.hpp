#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gto/conjugation.hpp"
#include "gto/tilting.hpp"

// File formats and text rendering used by the command-line tool.
//
// Order file:   {"kind": "matrix", "m": [[...], ...]}
//            or {"kind": "cyclic", "weights": [...]}
// m-data file:  {"m": [[...], ...], "a": [...], "nu": [...]}
//
// All indices are 0-based. Malformed files raise Error(MalformedInput).
namespace gto::io {

struct OrderSpec {
  std::optional<IntMatrix> m;
  std::optional<IntVector> weights;

  bool cyclic() const { return weights.has_value(); }
  /// Raw matrix; for cyclic specs this is the generated exponent matrix.
  IntMatrix matrix() const;
};

OrderSpec parse_order(std::string_view text);
std::string dump_order(const OrderSpec& spec);

struct MDataSpec {
  IntMatrix m;
  IntVector a;
  std::vector<std::size_t> nu;
};

MDataSpec parse_mdata(std::string_view text);
std::string dump_mdata(const MData& md);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// "(v0,v1,...)", or "0" for the zero vector.
std::string vertex_label(const ExponentVector& v);
/// "[x, y, z]".
std::string format_list(std::span<const std::int64_t> values);
std::string format_matrix(const IntMatrix& m, std::string_view indent);

/// Graphviz digraph; nodes sorted by exponent vector, edges by endpoints.
std::string to_dot(const Quiver& q);

/// {"code": ..., "message": ..., "witness": [...]} on one line.
std::string error_object(std::string_view code, std::string_view message,
                         std::span<const std::int64_t> witness);

}  // namespace gto::io
