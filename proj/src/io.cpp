#include "arf/io.hpp"

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace arf::io {

namespace {

std::string join(std::span<const int> xs, std::string_view open, std::string_view close) {
  std::string out(open);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += close;
  return out;
}

int type_or_zero(const NumericalSemigroup& s) { return s.is_naturals() ? 0 : type(s); }

// A MED semigroup has type m - 1, which spares the pseudo-Frobenius scan.
int type_or_zero(const NumericalSemigroup& s, const GeneratorSet& gens) {
  if (gens.embedding_dimension() == s.multiplicity()) return s.multiplicity() - 1;
  return type_or_zero(s);
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw std::invalid_argument("empty entry in integer list");
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) throw std::out_of_range("integer overflow: " + std::string(token));
    if (ec != std::errc() || end != token.data() + token.size() || value < 0) {
      throw std::invalid_argument("not a nonnegative integer: " + std::string(token));
    }
    if (value > std::numeric_limits<std::int32_t>::max()) {
      throw std::out_of_range("integer overflow: " + std::string(token) + " exceeds 2^31-1");
    }
    out.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string angle_list(std::span<const int> xs) { return join(xs, "<", ">"); }
std::string brace_list(std::span<const int> xs) { return join(xs, "{", "}"); }
std::string paren_list(std::span<const int> xs) { return join(xs, "(", ")"); }
std::string comma_list(std::span<const int> xs) { return join(xs, "", ""); }

Json semigroup_json(const NumericalSemigroup& s) { return semigroup_json(s, minimal_generators(s)); }

Json semigroup_json(const NumericalSemigroup& s, const GeneratorSet& gens) {
  Json j;
  j["frobenius"] = s.frobenius();
  j["multiplicity"] = s.multiplicity();
  j["genus"] = s.genus();
  j["type"] = type_or_zero(s, gens);
  j["min_generators"] = gens.gens;
  j["small_elements"] = s.small_elements();
  return j;
}

Json sequence_json(std::span<const int> xs) {
  Json j;
  j["sequence"] = std::vector<int>(xs.begin(), xs.end());
  const bool valid = validate_sequence(xs);
  j["valid"] = valid;
  if (valid) {
    ArfSequence seq{std::vector<int>(xs.begin(), xs.end())};
    j["refinement_free"] = !admits_proper_refinement(seq);
    j["semigroup"] = semigroup_json(semigroup_of_sequence(seq));
  } else {
    j["refinement_free"] = nullptr;
    j["semigroup"] = nullptr;
  }
  return j;
}

Json closure_json(const ClosureResult& result) {
  Json j;
  j["F"] = result.frobenius;
  j["X"] = result.input;
  j["is_ar_set"] = result.is_ar_set;
  if (result.closure) {
    j["closure"] = semigroup_json(*result.closure);
    j["rank"] = ar_rank(*result.closure);
  } else {
    j["closure"] = nullptr;
    j["rank"] = nullptr;
  }
  return j;
}

Json report_json(const EnumerationReport& report) {
  Json j;
  j["F"] = report.frobenius;
  j["nodes"] = report.node_count;
  j["per_depth"] = report.per_depth;
  j["maximal"] = report.maximal_count;
  j["wall_seconds"] = report.wall_seconds;
  return j;
}

Json tree_json(const CovarietyTree& tree) {
  Json j;
  j["F"] = tree.frobenius;
  Json nodes = Json::array();
  for (const TreeNode& node : tree.nodes) nodes.push_back(semigroup_json(node.semigroup, node.generators));
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (auto [child, parent] : tree.edges()) edges.push_back(Json::array({child, parent}));
  j["edges"] = std::move(edges);
  return j;
}

void write_dot(std::ostream& out, const CovarietyTree& tree) {
  out << "digraph \"Ar(" << tree.frobenius << ")\" {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << angle_list(tree.nodes[i].generators.gens) << "\"];\n";
  }
  for (auto [child, parent] : tree.edges()) out << "  n" << child << " -> n" << parent << ";\n";
  out << "}\n";
}

void write_csv_header(std::ostream& out) { out << "depth,frobenius,multiplicity,genus,type,generators\n"; }

void write_csv_row(std::ostream& out, int depth, const NumericalSemigroup& s, const GeneratorSet& gens) {
  out << depth << ',' << s.frobenius() << ',' << s.multiplicity() << ',' << s.genus() << ','
      << type_or_zero(s, gens) << ",\"" << comma_list(gens.gens) << "\"\n";
}

void write_table_header(std::ostream& out) {
  out << std::left << std::setw(6) << "depth" << std::setw(10) << "frobenius" << std::setw(13) << "multiplicity"
      << std::setw(7) << "genus" << std::setw(6) << "type" << "generators\n";
}

void write_table_row(std::ostream& out, int depth, const NumericalSemigroup& s, const GeneratorSet& gens) {
  out << std::left << std::setw(6) << depth << std::setw(10) << s.frobenius() << std::setw(13) << s.multiplicity()
      << std::setw(7) << s.genus() << std::setw(6) << type_or_zero(s, gens) << angle_list(gens.gens) << '\n';
}

void write_report_lines(std::ostream& out, const EnumerationReport& report, std::string_view prefix) {
  out << prefix << "F: " << report.frobenius << '\n';
  out << prefix << "nodes: " << report.node_count << '\n';
  for (std::size_t d = 0; d < report.per_depth.size(); ++d) {
    out << prefix << "depth " << d << ": " << report.per_depth[d] << '\n';
  }
  out << prefix << "maximal: " << report.maximal_count << '\n';
  out << prefix << "wall_seconds: " << report.wall_seconds << '\n';
}

}  // namespace arf::io
