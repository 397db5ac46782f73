#include "arf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "arf/closure.hpp"
#include "arf/io.hpp"
#include "arf/semigroup.hpp"
#include "arf/sequence.hpp"
#include "arf/tree.hpp"

namespace arf::cli {

namespace {

using io::Json;

// Thrown for bad command lines; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string frobenius_text;
  std::string list_text;
  std::string action;
  int threads = 1;
  std::size_t max_nodes = 10'000'000;
  bool stats = false;
  bool maximal_only = false;
  bool count = false;
};

int parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc() && value > std::numeric_limits<std::int32_t>::max())) {
    throw UsageError("integer overflow: " + std::string(what) + " exceeds 2^31-1");
  }
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(what) + " must be an integer, got '" + std::string(text) + "'");
  }
  if (value < std::numeric_limits<std::int32_t>::min()) throw UsageError("integer overflow: " + std::string(what));
  return static_cast<int>(value);
}

int parse_frobenius(std::string_view text, int minimum = 1) {
  const int f = parse_int(text, "F");
  if (f < minimum) throw UsageError("F must be at least " + std::to_string(minimum));
  return f;
}

std::vector<int> parse_list(std::string_view text) {
  try {
    return io::parse_int_list(text);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_generators(std::string_view text) {
  std::vector<int> gens = parse_list(text);
  if (gens.empty()) throw UsageError("no generators given");
  if (std::find(gens.begin(), gens.end(), 0) != gens.end()) throw UsageError("generators must be positive");
  return gens;
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (std::string_view a : allowed) {
    if (format == a) return;
  }
  throw UsageError("format '" + format + "' is not supported by this command");
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int depth_in_tree(const NumericalSemigroup& s) { return s.small_count() - 1; }

// Rows of (depth, semigroup, generators) shared by enumerate, tree and rank-one.
void emit_rows(std::ostream& out, const std::string& format, const std::vector<NumericalSemigroup>& list) {
  if (format == "csv") {
    io::write_csv_header(out);
    for (const auto& s : list) io::write_csv_row(out, depth_in_tree(s), s, minimal_generators(s));
  } else {
    io::write_table_header(out);
    for (const auto& s : list) io::write_table_row(out, depth_in_tree(s), s, minimal_generators(s));
  }
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json", "csv", "dot"});
  if (opt.threads < 1) throw UsageError("--threads must be at least 1");
  const int f = parse_frobenius(opt.frobenius_text);
  EnumerateOptions eopt{opt.threads, opt.max_nodes, false};

  if (opt.maximal_only) {
    if (opt.format == "dot") throw UsageError("dot output needs the full tree; drop --maximal-only");
    std::vector<NumericalSemigroup> maximal = maximal_elements(f, opt.threads);
    std::optional<EnumerationReport> report;
    if (opt.stats) report = enumerate_ar(f, eopt).report;
    if (opt.format == "json") {
      Json j;
      j["F"] = f;
      Json nodes = Json::array();
      for (const auto& s : maximal) nodes.push_back(io::semigroup_json(s));
      j["nodes"] = std::move(nodes);
      if (report) j["stats"] = io::report_json(*report);
      emit_json(out, j);
    } else {
      emit_rows(out, opt.format, maximal);
      if (report) io::write_report_lines(out, *report, "# ");
    }
    return kExitOk;
  }

  const CovarietyTree tree = enumerate_ar(f, eopt);
  if (opt.format == "json") {
    Json j = io::tree_json(tree);
    if (opt.stats) j["stats"] = io::report_json(tree.report);
    emit_json(out, j);
  } else if (opt.format == "dot") {
    io::write_dot(out, tree);
    if (opt.stats) io::write_report_lines(out, tree.report, "// ");
  } else {
    if (opt.format == "csv") {
      io::write_csv_header(out);
      for (const auto& n : tree.nodes) io::write_csv_row(out, n.depth, n.semigroup, n.generators);
    } else {
      io::write_table_header(out);
      for (const auto& n : tree.nodes) io::write_table_row(out, n.depth, n.semigroup, n.generators);
    }
    if (opt.stats) io::write_report_lines(out, tree.report, "# ");
  }
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json"});
  const NumericalSemigroup s = from_generators(parse_generators(opt.list_text));
  const GeneratorSet msg = minimal_generators(s);
  const bool naturals = s.is_naturals();
  const std::vector<int> pf = naturals ? std::vector<int>{} : pseudo_frobenius(s);
  const std::vector<int> sg = naturals ? std::vector<int>{} : special_gaps_from_pf(pf);
  const std::vector<int> seq = difference_sequence(s);
  const bool med = is_med(s);
  const bool arf = is_arf(s);

  if (opt.format == "json") {
    Json j;
    j["semigroup"] = io::semigroup_json(s);
    j["embedding_dimension"] = msg.embedding_dimension();
    j["small_count"] = s.small_count();
    j["pseudo_frobenius"] = pf;
    j["special_gaps"] = sg;
    j["is_med"] = med;
    j["is_arf"] = arf;
    j["sequence"] = seq;
    if (naturals) {
      j["sequence_valid"] = nullptr;
    } else {
      j["sequence_valid"] = validate_sequence(seq);
    }
    emit_json(out, j);
    return kExitOk;
  }

  out << "semigroup: " << (naturals ? std::string("N") : io::angle_list(msg.gens)) << '\n'
      << "frobenius: " << s.frobenius() << '\n'
      << "multiplicity: " << s.multiplicity() << '\n'
      << "embedding_dimension: " << msg.embedding_dimension() << '\n'
      << "genus: " << s.genus() << '\n'
      << "small_count: " << s.small_count() << '\n'
      << "type: " << pf.size() << '\n'
      << "min_generators: " << io::brace_list(msg.gens) << '\n'
      << "small_elements: " << io::brace_list(s.small_elements()) << '\n'
      << "pseudo_frobenius: " << io::brace_list(pf) << '\n'
      << "special_gaps: " << io::brace_list(sg) << '\n'
      << "is_med: " << (med ? "true" : "false") << '\n'
      << "is_arf: " << (arf ? "true" : "false") << '\n'
      << "sequence: " << io::paren_list(seq) << '\n'
      << "sequence_valid: " << (naturals ? "n/a" : validate_sequence(seq) ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_minimal_gens(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json"});
  const NumericalSemigroup s = from_generators(parse_generators(opt.list_text));
  const GeneratorSet msg = minimal_generators(s);
  const bool arf = !s.is_naturals() && is_arf(s);
  const std::vector<int> ar_gens = arf ? minimal_ar_generators(s) : std::vector<int>{};

  if (opt.format == "json") {
    Json j;
    j["semigroup"] = io::semigroup_json(s);
    if (arf) {
      j["ar_generators"] = ar_gens;
      j["rank"] = ar_gens.size();
    } else {
      j["ar_generators"] = nullptr;
      j["rank"] = nullptr;
    }
    emit_json(out, j);
    return kExitOk;
  }
  out << "min_generators: " << io::brace_list(msg.gens) << '\n'
      << "embedding_dimension: " << msg.embedding_dimension() << '\n';
  if (arf) {
    out << "ar_generators: " << io::brace_list(ar_gens) << '\n' << "rank: " << ar_gens.size() << '\n';
  } else {
    out << "ar_generators: n/a (not an Arf semigroup with gaps)\n";
  }
  return kExitOk;
}

int cmd_closure(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json"});
  const int f = parse_frobenius(opt.frobenius_text);
  const ClosureResult result = ar_closure(parse_list(opt.list_text), f);

  if (opt.format == "json") {
    emit_json(out, io::closure_json(result));
  } else {
    out << "F: " << f << '\n' << "X: " << io::brace_list(result.input) << '\n'
        << "is_ar_set: " << (result.is_ar_set ? "true" : "false") << '\n';
    if (result.closure) {
      const NumericalSemigroup& c = *result.closure;
      const std::vector<int> ar_gens = minimal_ar_generators(c);
      out << "closure: " << io::angle_list(minimal_generators(c).gens) << '\n'
          << "small_elements: " << io::brace_list(c.small_elements()) << '\n'
          << "genus: " << c.genus() << '\n'
          << "ar_generators: " << io::brace_list(ar_gens) << '\n'
          << "rank: " << ar_gens.size() << '\n';
    }
  }
  return result.is_ar_set ? kExitOk : kExitNegative;
}

int cmd_seq(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json"});
  const std::vector<int> xs = parse_list(opt.list_text);
  if (xs.empty()) throw UsageError("empty sequence");
  const bool valid = validate_sequence(xs);

  if (opt.format == "json") {
    Json j = io::sequence_json(xs);
    if (opt.action == "refinements" && valid) {
      Json list = Json::array();
      for (const Refinement& r : proper_refinements(ArfSequence(xs))) {
        Json item;
        item["position"] = r.position;
        item["a"] = r.a;
        item["sequence"] = r.result.values();
        list.push_back(std::move(item));
      }
      j["refinements"] = std::move(list);
    }
    emit_json(out, j);
    return valid ? kExitOk : kExitNegative;
  }

  out << "sequence: " << io::paren_list(xs) << '\n' << "valid: " << (valid ? "true" : "false") << '\n';
  if (!valid) return kExitNegative;
  const ArfSequence seq(xs);
  const std::vector<Refinement> refinements = proper_refinements(seq);
  out << "refinement_free: " << (refinements.empty() ? "true" : "false") << '\n';
  if (opt.action == "semigroup" || opt.action == "validate") {
    const NumericalSemigroup s = semigroup_of_sequence(seq);
    out << "semigroup: " << io::angle_list(minimal_generators(s).gens) << '\n'
        << "frobenius: " << s.frobenius() << '\n'
        << "small_elements: " << io::brace_list(s.small_elements()) << '\n';
  }
  if (opt.action == "refinements") {
    for (const Refinement& r : refinements) {
      out << "refinement: position " << r.position << " a " << r.a << " -> " << io::paren_list(r.result.values())
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_rank_one(const Options& opt, std::ostream& out) {
  require_format(opt.format, {"table", "json", "csv"});
  const int f = parse_frobenius(opt.frobenius_text, 2);
  const std::int64_t count = count_rank_one(f);

  if (opt.count) {
    if (opt.format == "json") {
      Json j;
      j["F"] = f;
      j["count"] = count;
      emit_json(out, j);
    } else {
      out << count << '\n';
    }
    return kExitOk;
  }

  if (static_cast<std::size_t>(count) > opt.max_nodes) {
    throw UsageError("rank-one listing exceeds --max-nodes (" + std::to_string(opt.max_nodes) + ")");
  }
  const std::vector<NumericalSemigroup> catalog = rank_one_catalog(f);
  if (opt.format == "json") {
    Json j;
    j["F"] = f;
    j["count"] = count;
    Json list = Json::array();
    for (const auto& s : catalog) list.push_back(io::semigroup_json(s));
    j["semigroups"] = std::move(list);
    emit_json(out, j);
  } else {
    emit_rows(out, opt.format, catalog);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arf numerical semigroups with fixed Frobenius number", "arfsg"};
  app.require_subcommand(1);
  Options opt;

  const auto add_tree_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--threads", opt.threads, "OpenMP workers for the level expansion");
    cmd->add_flag("--stats", opt.stats, "append the enumeration report");
    cmd->add_option("--max-nodes", opt.max_nodes, "abort once the tree exceeds this many nodes");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list Ar(F)");
  enumerate->add_option("F", opt.frobenius_text, "Frobenius number")->required();
  enumerate->add_flag("--maximal-only", opt.maximal_only, "only the inclusion-maximal elements");
  add_tree_flags(enumerate);

  auto* tree = app.add_subcommand("tree", "the tree G(F)");
  tree->add_option("F", opt.frobenius_text, "Frobenius number")->required();
  add_tree_flags(tree);

  auto* check = app.add_subcommand("check", "invariants of <gens>");
  check->add_option("gens", opt.list_text, "comma-separated generators")->required();

  auto* min_gens = app.add_subcommand("minimal-gens", "minimal generators and Ar(F)-system of <gens>");
  min_gens->add_option("gens", opt.list_text, "comma-separated generators")->required();

  auto* closure = app.add_subcommand("closure", "Ar(F)[X]");
  closure->add_option("F", opt.frobenius_text, "Frobenius number")->required();
  closure->add_option("--set", opt.list_text, "comma-separated X")->required();

  auto* seq = app.add_subcommand("seq", "Arf sequences");
  seq->add_option("action", opt.action, "validate | semigroup | refinements")
      ->required()
      ->check(CLI::IsMember({"validate", "semigroup", "refinements"}));
  seq->add_option("xs", opt.list_text, "comma-separated sequence")->required();

  auto* rank_one = app.add_subcommand("rank-one", "elements of Ar(F) of rank one");
  rank_one->add_option("F", opt.frobenius_text, "Frobenius number")->required();
  rank_one->add_flag("--count", opt.count, "only print how many there are");
  rank_one->add_option("--max-nodes", opt.max_nodes, "refuse listings longer than this");

  for (CLI::App* cmd : {enumerate, tree, check, min_gens, closure, seq, rank_one}) {
    cmd->add_option("--format", opt.format, "table | json | csv | dot");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      if (opt.format.empty()) opt.format = "table";
      return cmd_enumerate(opt, out);
    }
    if (tree->parsed()) {
      if (opt.format.empty()) opt.format = "dot";
      opt.maximal_only = false;
      return cmd_enumerate(opt, out);
    }
    if (opt.format.empty()) opt.format = "table";
    if (check->parsed()) return cmd_check(opt, out);
    if (min_gens->parsed()) return cmd_minimal_gens(opt, out);
    if (closure->parsed()) return cmd_closure(opt, out);
    if (seq->parsed()) return cmd_seq(opt, out);
    if (rank_one->parsed()) return cmd_rank_one(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace arf::cli
