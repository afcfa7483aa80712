#pragma once

// JSON file formats for complexes, maps, groups, groupoids and actions.
// The grammar is described in docs/file-formats.md.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "tcs/group.hpp"
#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"
#include "tcs/spaces.hpp"

namespace tcs {

inline constexpr int kFormatVersion = 1;

enum class ComplexKind { kan, auxiliary };

struct LoadedComplex {
  ComplexKind kind = ComplexKind::kan;
  SimplicialSetPtr data;
};

nlohmann::json complex_to_json(const SimplicialSet& data, ComplexKind kind = ComplexKind::kan);
/// Rebuilds the tables, deriving degeneracies from the Eilenberg-Zilber
/// records. Throws InvalidData on malformed input.
LoadedComplex complex_from_json(const nlohmann::json& j);

void save_complex(const std::filesystem::path& path, const SimplicialSet& data,
                  ComplexKind kind = ComplexKind::kan);
LoadedComplex load_complex(const std::filesystem::path& path);
/// load_complex followed by kan_check (throws NotKan with the horn).
BoundedKanComplex load_kan_complex(const std::filesystem::path& path);

nlohmann::json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const nlohmann::json& j, const SimplicialSetPtr& source,
                            const SimplicialSetPtr& target);

nlohmann::json group_to_json(const FiniteGroup& g);
/// {"elements": [...], "table": [[...]]} or a built-in name string.
FiniteGroup group_from_json(const nlohmann::json& j);
/// A built-in name (Z/4, S_3, ...) or the path of a table file.
FiniteGroup resolve_group(const std::string& name_or_path);

nlohmann::json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

/// {"group": ..., "space": {"discrete": n} | complex | "file",
///  "vertices": [[...]] | "levels": [[[...]]]}
GroupAction action_from_json(const nlohmann::json& j,
                             const std::filesystem::path& base_dir = {});
nlohmann::json action_to_json(const GroupAction& a);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace tcs
