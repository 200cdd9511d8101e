#pragma once

#include "locsys/tower.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace locsys {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON in which arrays of scalars stay on one line.
/// Output depends only on the value, so it is usable for golden files.
std::string canonical_json(const Json& value);

/// Compact tower description {n1, field, sigs}, kept so that such files
/// round-trip in their short form.
struct DiagonalTowerSpec {
    std::size_t n1 = 1;
    Field field;
    std::vector<DiagonalSignature> sigs;
};

struct TowerFile {
    LocalSystem system;
    std::optional<DiagonalTowerSpec> diagonal;
};

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const Budget& budget = {});
std::string serialize_algebra(const Algebra& a);
/// Throws ParseError on malformed input, BudgetExceeded when dim is too large.
Algebra parse_algebra(std::string_view text, const Budget& budget = {});
Algebra load_algebra(const std::filesystem::path& path, const Budget& budget = {});

/// Sparse {rows, cols, entries: [[r, c, "v"], ...]} with 1-based indices.
Json matrix_to_json(const Mat& m);
/// Accepts the sparse form or a dense array of rows.
Mat matrix_from_json(const Json& j, const Field& field);

std::string serialize_tower(const TowerFile& t);
std::string serialize_tower(const LocalSystem& ls);
/// Node file references are resolved against base_dir. Missing composites
/// are derived from the recorded steps.
TowerFile parse_tower(std::string_view text, const std::filesystem::path& base_dir, const Budget& budget = {});
TowerFile load_tower(const std::filesystem::path& path, const Budget& budget = {});

/// Writes text to path, throwing Error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace locsys
