#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "colsys/census.hpp"
#include "colsys/core.hpp"

namespace colsys {

using Json = nlohmann::ordered_json;

// System files: {"colors": n, "origin": a, "horizontal": [[c, d], ...],
// "vertical": [...]}. Writers emit pairs sorted without duplicates; readers
// reject out-of-range pairs.
Json system_to_json(const ColoringSystem& sys);
ColoringSystem system_from_json(const Json& j);

// Sequence files are JSON arrays of integers.
Json sequence_to_json(const ColorSequence& seq);
ColorSequence sequence_from_json(const Json& j);

// Triangle files: {"depth": m, "rows": [[g(0,0), g(1,0), ...], [g(0,1), ...], ...]}
// with rows listed bottom-up.
Json triangle_to_json(const TriangleColoring& tri);
TriangleColoring triangle_from_json(const Json& j);

/// A coloring file holds either a sequence or a triangle.
using Coloring = std::variant<ColorSequence, TriangleColoring>;
Coloring coloring_from_json(const Json& j);
ColorSequence as_sequence(const Coloring& c);

Json witness_to_json(const PeriodicWitness& w);
PeriodicWitness witness_from_json(const Json& j);

/// {"verdict": "bounded" | "has_coloring" | "unknown", ...details}
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

/// Census line: {"system_index", "canonical_id", "verdict", "detail"} in that order.
Json record_to_json(const CensusRecord& r);
CensusRecord record_from_json(const Json& j);

Json summary_to_json(const CensusSummary& s);

/// Parses JSON text, rethrowing syntax errors as InputError with the byte offset.
Json parse_json(const std::string& text, const std::string& source = "input");
Json load_json(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);

ColoringSystem load_system(const std::filesystem::path& path);
Coloring load_coloring(const std::filesystem::path& path);

}  // namespace colsys
