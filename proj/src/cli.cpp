#include "gto/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gto/io.hpp"

namespace gto::cli {
namespace {

void print_bool(std::ostream& out, const char* key, bool value) {
  out << key << ": " << (value ? "true" : "false") << "\n";
}

IntVector nu_list(const Permutation& nu) {
  return IntVector(nu.images().begin(), nu.images().end());
}

void print_gorenstein(std::ostream& out, const GorensteinData& g) {
  out << "nu: " << io::format_list(nu_list(g.nu)) << "\n"
      << "ell: " << io::format_list(g.ell) << "\n"
      << "p: " << io::format_list(g.p) << "\n"
      << "p_av: " << g.p_av.str() << "\n";
}

ExponentMatrix load_order(const std::string& path, io::OrderSpec* spec_out = nullptr) {
  io::OrderSpec spec = io::parse_order(io::read_file(path));
  ExponentMatrix m = ExponentMatrix::make(spec.matrix());
  if (spec_out) *spec_out = std::move(spec);
  return m;
}

MData load_mdata(const std::string& path) {
  io::MDataSpec spec = io::parse_mdata(io::read_file(path));
  return validate_mdata(std::move(spec.m), std::move(spec.a),
                        Permutation(std::move(spec.nu)));
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const io::OrderSpec spec = io::parse_order(io::read_file(path));
  const IntMatrix m = spec.matrix();
  const OrderReport report = validate_order(m);
  out << "n: " << m.size() << "\n";
  print_bool(out, "triangle_ok", report.triangle_ok);
  print_bool(out, "basic", report.basic);
  print_bool(out, "n_graded", report.n_graded);
  IntVector witness;
  if (report.first_violation) {
    const auto [i, k, j] = *report.first_violation;
    out << "first_violation: [" << i << ", " << k << ", " << j << "]\n";
    witness = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(k),
               static_cast<std::int64_t>(j)};
  }
  if (report.non_basic_pair) {
    const auto [i, j] = *report.non_basic_pair;
    out << "non_basic_pair: [" << i << ", " << j << "]\n";
    if (witness.empty()) {
      witness = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
    }
  }
  if (report.fully_valid()) return kOk;
  std::string why = !report.triangle_ok ? "triangle inequality fails"
                    : !report.basic     ? "order is not basic"
                                        : "order is not N-graded";
  err << io::error_object(to_string(ErrorCode::InvalidOrder), why, witness) << "\n";
  return kDomainError;
}

int cmd_gorenstein(const std::string& path, std::ostream& out) {
  print_gorenstein(out, detect_gorenstein(load_order(path)));
  return kOk;
}

int cmd_normalize(const std::string& path, const std::string& emit, std::ostream& out) {
  const NormalizedOrder result = normalize_order(load_order(path));
  out << "shift: " << io::format_list(result.order_shift) << "\n";
  print_gorenstein(out, result.g);
  out << "m:\n" << io::format_matrix(result.order.matrix(), "  ");
  if (!emit.empty()) {
    io::write_file(emit, io::dump_order({result.order.matrix(), std::nullopt}));
  }
  return kOk;
}

int cmd_tilting(const std::string& path, std::ostream& out) {
  const ExponentMatrix m = load_order(path);
  const GorensteinData g = detect_gorenstein(m);
  const auto summands = tilting_summands(m, g);
  out << "rank: " << grothendieck_rank(g) << "\n"
      << "summands: " << summands.size() << "\n";
  for (const Summand& s : summands) {
    out << "  " << io::vertex_label(s.v) << " <-";
    for (const auto& label : s.labels) out << " (" << label.i << "," << label.j << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_quiver(const std::string& path, const std::string& dot, bool oracle,
               std::ostream& out, std::ostream& err) {
  io::OrderSpec spec;
  const ExponentMatrix m = load_order(path, &spec);
  const GorensteinData g = detect_gorenstein(m);
  const Quiver q = hasse_quiver(build_VA(m, g)).canonical();
  out << "vertices: " << q.vertices.size() << "\n"
      << "arrows: " << q.arrows.size() << "\n";
  for (auto [a, b] : q.arrows) {
    out << "  " << io::vertex_label(q.vertices[a]) << " -> "
        << io::vertex_label(q.vertices[b]) << "\n";
  }
  if (!dot.empty()) io::write_file(dot, io::to_dot(q));
  if (!oracle) return kOk;
  if (!spec.cyclic()) {
    throw Error(ErrorCode::NotCyclic, "--oracle needs a cyclic order file");
  }
  const bool same = same_labeled_quiver(q, cyclic_hasse_oracle(*spec.weights).quiver);
  out << "oracle: " << (same ? "ISOMORPHIC" : "NOT ISOMORPHIC") << "\n";
  if (same) return kOk;
  err << io::error_object(to_string(ErrorCode::OracleMismatch),
                          "Hasse quiver differs from the line-by-line oracle", {})
      << "\n";
  return kDomainError;
}

int cmd_mdata_check(const std::string& path, std::ostream& out) {
  const MData md = load_mdata(path);
  out << "n: " << md.size() << "\n"
      << "a_av: " << md.a_av().str() << "\n"
      << "orbits:";
  for (const Orbit& orbit : md.orbits()) {
    IntVector members(orbit.members.begin(), orbit.members.end());
    out << " " << io::format_list(members);
  }
  out << "\n";
  print_bool(out, "floor_type", is_floor_type(md));
  print_bool(out, "sigma_nonneg", is_sigma_nonneg(md.m()));
  print_bool(out, "non_negative", md.m().min_entry() >= 0);
  return kOk;
}

int cmd_mdata_normalize(const std::string& path, const std::string& emit,
                        std::ostream& out) {
  const MData md = load_mdata(path);
  const ShiftVector s = normalize_mdata(md);
  const MData result = conjugate_mdata(md, s);
  out << "shift: " << io::format_list(s) << "\n"
      << "a: " << io::format_list(result.a()) << "\n"
      << "a_av: " << result.a_av().str() << "\n"
      << "m:\n" << io::format_matrix(result.m(), "  ");
  if (!emit.empty()) io::write_file(emit, io::dump_mdata(result));
  return kOk;
}

int cmd_cyclic(const std::vector<std::int64_t>& weights, const std::string& emit,
               std::ostream& out) {
  cyclic_order(weights);  // reject bad weights before writing anything
  const std::string text = io::dump_order({std::nullopt, weights});
  if (emit.empty()) {
    out << text;
  } else {
    io::write_file(emit, text);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Gorenstein tiled orders: parameters, normalization, tilting posets"};
  app.require_subcommand(1);

  std::string order_path;
  std::string emit_path;
  std::string dot_path;
  bool oracle = false;
  std::vector<std::int64_t> weights;

  auto* validate = app.add_subcommand("validate", "Check the tiled-order axioms");
  validate->add_option("order", order_path, "Order file")->required();
  auto* gorenstein = app.add_subcommand("gorenstein", "Nakayama permutation and Gorenstein parameters");
  gorenstein->add_option("order", order_path, "Order file")->required();
  auto* normalize = app.add_subcommand("normalize", "Graded-Morita normalization to |p_i - p_av| < 1");
  normalize->add_option("order", order_path, "Order file")->required();
  normalize->add_option("--emit", emit_path, "Write the shifted order file here");
  auto* tilting = app.add_subcommand("tilting", "Tilting summands and Grothendieck rank");
  tilting->add_option("order", order_path, "Order file")->required();
  auto* quiver = app.add_subcommand("quiver", "Hasse quiver of the tilting poset");
  quiver->add_option("order", order_path, "Order file")->required();
  quiver->add_option("--dot", dot_path, "Write a Graphviz file here");
  quiver->add_flag("--oracle", oracle, "Cross-check against the cyclic line rules");
  auto* mdata_check = app.add_subcommand("mdata-check", "Validate an m-data file");
  mdata_check->add_option("mdata", order_path, "m-data file")->required();
  auto* mdata_normalize = app.add_subcommand("mdata-normalize", "Almost-constant non-negative conjugate");
  mdata_normalize->add_option("mdata", order_path, "m-data file")->required();
  mdata_normalize->add_option("--emit", emit_path, "Write the normalized m-data file here");
  auto* cyclic = app.add_subcommand("cyclic", "Generate a cyclic Gorenstein order file");
  cyclic->add_option("--weights", weights, "Comma-separated non-negative weights")
      ->required()
      ->delimiter(',');
  cyclic->add_option("--emit", emit_path, "Write the order file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << io::error_object("Usage", e.what(), {}) << "\n";
    return kMalformedInput;
  }

  try {
    if (*validate) return cmd_validate(order_path, out, err);
    if (*gorenstein) return cmd_gorenstein(order_path, out);
    if (*normalize) return cmd_normalize(order_path, emit_path, out);
    if (*tilting) return cmd_tilting(order_path, out);
    if (*quiver) return cmd_quiver(order_path, dot_path, oracle, out, err);
    if (*mdata_check) return cmd_mdata_check(order_path, out);
    if (*mdata_normalize) return cmd_mdata_normalize(order_path, emit_path, out);
    if (*cyclic) return cmd_cyclic(weights, emit_path, out);
  } catch (const Error& e) {
    const std::string message = e.what();
    const auto colon = message.find(": ");
    err << io::error_object(to_string(e.code()),
                            colon == std::string::npos ? message : message.substr(colon + 2),
                            e.witness())
        << "\n";
    return e.code() == ErrorCode::MalformedInput ? kMalformedInput : kDomainError;
  } catch (const std::exception& e) {
    err << io::error_object("Internal", e.what(), {}) << "\n";
    return kDomainError;
  }
  return kMalformedInput;
}

}  // namespace gto::cli
