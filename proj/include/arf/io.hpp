#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arf/closure.hpp"
#include "arf/semigroup.hpp"
#include "arf/sequence.hpp"
#include "arf/tree.hpp"

namespace arf::io {

using Json = nlohmann::ordered_json;

/// Comma-separated nonnegative integers ("5,7,9"). An empty string gives an
/// empty list. Throws std::invalid_argument on malformed text and
/// std::out_of_range for values above 2^31 - 1.
std::vector<int> parse_int_list(std::string_view text);

/// "<5,7,9>"
std::string angle_list(std::span<const int> xs);
/// "{11,13}"
std::string brace_list(std::span<const int> xs);
/// "(2,2,2,8)"
std::string paren_list(std::span<const int> xs);
/// "5,7,9"
std::string comma_list(std::span<const int> xs);

/// {"frobenius","multiplicity","genus","type","min_generators","small_elements"}
Json semigroup_json(const NumericalSemigroup& s);
/// Same, with msg(S) already known.
Json semigroup_json(const NumericalSemigroup& s, const GeneratorSet& gens);

/// {"sequence","valid","refinement_free","semigroup"}; the last two are null
/// for an invalid sequence.
Json sequence_json(std::span<const int> xs);

/// {"F","X","is_ar_set","closure","rank"}
Json closure_json(const ClosureResult& result);

Json report_json(const EnumerationReport& report);

/// {"F","nodes":[semigroup...],"edges":[[child,parent]...]}
Json tree_json(const CovarietyTree& tree);

/// Directed child -> parent edges, nodes labelled by their msg.
void write_dot(std::ostream& out, const CovarietyTree& tree);

/// Header `depth,frobenius,multiplicity,genus,type,generators`; the generator
/// list is quoted since it contains commas.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, int depth, const NumericalSemigroup& s, const GeneratorSet& gens);

void write_table_header(std::ostream& out);
void write_table_row(std::ostream& out, int depth, const NumericalSemigroup& s, const GeneratorSet& gens);

/// `# key: value` lines.
void write_report_lines(std::ostream& out, const EnumerationReport& report, std::string_view prefix);

}  // namespace arf::io
