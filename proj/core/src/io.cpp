#include "tcs/io.hpp"

#include <fstream>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "tcs/errors.hpp"

namespace tcs {

using nlohmann::json;

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidData("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidData(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidData("cannot write " + path.string());
  out << j.dump(1) << "\n";
}

namespace {

void check_version(const json& j) {
  if (!j.is_object()) throw InvalidData("expected a JSON object");
  const int v = j.value("format_version", -1);
  if (v != kFormatVersion) {
    throw InvalidData("unsupported format_version " + std::to_string(v));
  }
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw InvalidData(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw InvalidData(std::string("field \"") + name + "\": " + e.what());
  }
}

}  // namespace

nlohmann::json complex_to_json(const SimplicialSet& data, ComplexKind kind) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind == ComplexKind::kan ? "kan" : "auxiliary";
  j["bound"] = data.bound();
  j["levels"] = json::array();
  for (int k = 0; k <= data.bound(); ++k) {
    json level = json::array();
    for (SimplexId x = 0; x < data.size(k); ++x) {
      json rec;
      rec["id"] = x;
      std::vector<SimplexId> faces;
      for (int i = 0; k > 0 && i <= k; ++i) faces.push_back(data.face(k, x, i));
      rec["faces"] = faces;
      rec["degeneracy_word"] = data.degeneracy_word(k, x);
      level.push_back(std::move(rec));
    }
    j["levels"].push_back(std::move(level));
  }
  return j;
}

LoadedComplex complex_from_json(const nlohmann::json& j) {
  check_version(j);
  LoadedComplex out;
  const auto kind = j.value("kind", std::string("kan"));
  if (kind == "kan") {
    out.kind = ComplexKind::kan;
  } else if (kind == "auxiliary") {
    out.kind = ComplexKind::auxiliary;
  } else {
    throw InvalidData("unknown complex kind \"" + kind + "\"");
  }
  const int bound = field<int>(j, "bound");
  if (bound < 0 || bound > 30) throw InvalidData("bound out of range");
  const auto& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != bound + 1) {
    throw InvalidData("\"levels\" must list dimensions 0.." + std::to_string(bound));
  }
  std::vector<SimplicialSet::LevelTables> tables(static_cast<std::size_t>(bound + 1));
  std::vector<std::vector<std::vector<int>>> words(static_cast<std::size_t>(bound + 1));
  for (int k = 0; k <= bound; ++k) {
    const auto& level = levels[static_cast<std::size_t>(k)];
    auto& t = tables[static_cast<std::size_t>(k)];
    t.count = level.size();
    t.faces.assign(t.count * static_cast<std::size_t>(k > 0 ? k + 1 : 0), kNoSimplex);
    words[static_cast<std::size_t>(k)].resize(t.count);
    std::vector<bool> seen(t.count, false);
    for (const auto& rec : level) {
      const auto id = field<std::size_t>(rec, "id");
      if (id >= t.count || seen[id]) {
        throw InvalidData("level " + std::to_string(k) + ": ids must be 0.." +
                          std::to_string(t.count - 1) + " without repeats");
      }
      seen[id] = true;
      const auto faces = rec.contains("faces") ? field<std::vector<SimplexId>>(rec, "faces")
                                               : std::vector<SimplexId>{};
      if (static_cast<int>(faces.size()) != (k > 0 ? k + 1 : 0)) {
        throw InvalidData("simplex " + std::to_string(id) + " of dimension " +
                          std::to_string(k) + " needs " + std::to_string(k > 0 ? k + 1 : 0) +
                          " faces");
      }
      for (std::size_t i = 0; i < faces.size(); ++i) {
        t.faces[id * static_cast<std::size_t>(k + 1) + i] = faces[i];
      }
      auto word = rec.contains("degeneracy_word") ? field<std::vector<int>>(rec, "degeneracy_word")
                                                  : std::vector<int>{};
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] >= k || (i > 0 && word[i] >= word[i - 1])) {
          throw InvalidData("simplex " + std::to_string(id) + " of dimension " +
                            std::to_string(k) +
                            ": degeneracy word must be strictly decreasing indices below the dimension");
        }
      }
      words[static_cast<std::size_t>(k)][id] = std::move(word);
    }
    for (SimplexId f : t.faces) {
      if (k > 0 && f >= tables[static_cast<std::size_t>(k - 1)].count) {
        throw InvalidData("face id out of range in dimension " + std::to_string(k));
      }
    }
  }
  // Eilenberg-Zilber forms: base by stripping the word with faces.
  struct Form {
    int base_dim;
    SimplexId base;
    std::uint32_t mask;
  };
  std::vector<std::vector<Form>> forms(static_cast<std::size_t>(bound + 1));
  std::map<std::tuple<int, int, SimplexId, std::uint32_t>, SimplexId> by_form;
  for (int k = 0; k <= bound; ++k) {
    const auto& t = tables[static_cast<std::size_t>(k)];
    for (SimplexId x = 0; x < t.count; ++x) {
      const auto& word = words[static_cast<std::size_t>(k)][x];
      SimplexId b = x;
      int dim = k;
      for (int index : word) {
        b = tables[static_cast<std::size_t>(dim)].faces[b * static_cast<std::size_t>(dim + 1) +
                                                       static_cast<std::size_t>(index)];
        --dim;
      }
      if (!words[static_cast<std::size_t>(dim)][b].empty()) {
        throw InvalidData("simplex " + std::to_string(x) + " of dimension " + std::to_string(k) +
                          " has a degenerate base");
      }
      OperatorWord letters;
      for (int index : word) letters.push_back({OperatorLetter::Kind::degeneracy, index});
      const auto mask = word_operator(letters, dim).repeat_mask();
      forms[static_cast<std::size_t>(k)].push_back({dim, b, mask});
      if (!by_form.emplace(std::make_tuple(k, dim, b, mask), x).second) {
        throw InvalidData("two simplices of dimension " + std::to_string(k) +
                          " share the Eilenberg-Zilber form of " + std::to_string(x));
      }
    }
  }
  for (int k = 0; k < bound; ++k) {
    auto& t = tables[static_cast<std::size_t>(k)];
    for (SimplexId x = 0; x < t.count; ++x) {
      const auto& f = forms[static_cast<std::size_t>(k)][x];
      const auto sigma = SimplicialOperator::surjection_from_mask(k, f.mask);
      for (int j = 0; j <= k; ++j) {
        const auto mask = sigma.after(SimplicialOperator::codegeneracy(k, j)).repeat_mask();
        auto it = by_form.find(std::make_tuple(k + 1, f.base_dim, f.base, mask));
        if (it == by_form.end()) {
          throw InvalidData("degeneracy s_" + std::to_string(j) + " of simplex " +
                            std::to_string(x) + " in dimension " + std::to_string(k) +
                            " is not listed");
        }
        t.degeneracies.push_back(it->second);
      }
    }
  }
  out.data = share(SimplicialSet::from_tables(bound, std::move(tables)));
  return out;
}

void save_complex(const std::filesystem::path& path, const SimplicialSet& data,
                  ComplexKind kind) {
  write_json(path, complex_to_json(data, kind));
}

LoadedComplex load_complex(const std::filesystem::path& path) {
  try {
    return complex_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw InvalidData(path.string() + ": " + e.what());
  }
}

BoundedKanComplex load_kan_complex(const std::filesystem::path& path) {
  auto loaded = load_complex(path);
  return require_kan(loaded.data);
}

nlohmann::json map_to_json(const SimplicialMap& f) {
  json j;
  j["format_version"] = kFormatVersion;
  j["bound"] = f.bound();
  j["levels"] = f.images();
  return j;
}

SimplicialMap map_from_json(const nlohmann::json& j, const SimplicialSetPtr& source,
                            const SimplicialSetPtr& target) {
  check_version(j);
  SimplicialMap f(source, target, field<std::vector<std::vector<SimplexId>>>(j, "levels"));
  if (auto why = f.check(); !why.empty()) throw InvalidData("map is not simplicial: " + why);
  return f;
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  return {{"label", g.label()}, {"elements", g.elements()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) return resolve_group(j.get<std::string>());
  const auto elements = field<std::vector<std::string>>(j, "elements");
  auto table = field<std::vector<std::vector<int>>>(j, "table");
  return FiniteGroup(elements, std::move(table), j.value("label", std::string()));
}

FiniteGroup resolve_group(const std::string& name_or_path) {
  if (auto g = builtin_group(name_or_path)) return *g;
  if (std::filesystem::exists(name_or_path)) return group_from_json(read_json(name_or_path));
  throw InvalidData("unknown group \"" + name_or_path +
                    "\" (expected Z/n, S_n, A_n, D_n, a product GxH or a table file)");
}

nlohmann::json groupoid_to_json(const FiniteGroupoid& g) {
  json morphisms = json::array();
  for (const auto& m : g.morphisms()) {
    morphisms.push_back({{"source", m.source}, {"target", m.target}, {"name", m.name}});
  }
  return {{"objects", g.objects()}, {"morphisms", morphisms}, {"compose", g.composition()}};
}

FiniteGroupoid groupoid_from_json(const nlohmann::json& j) {
  std::vector<FiniteGroupoid::Morphism> morphisms;
  for (const auto& m : j.at("morphisms")) {
    morphisms.push_back({field<int>(m, "source"), field<int>(m, "target"),
                         m.value("name", std::to_string(morphisms.size()))});
  }
  return FiniteGroupoid(field<int>(j, "objects"), std::move(morphisms),
                        field<std::vector<std::vector<int>>>(j, "compose"));
}

GroupAction action_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.contains("group")) throw InvalidData("action file needs a \"group\"");
  FiniteGroup group = j.at("group").is_string()
                          ? resolve_group(j.at("group").get<std::string>())
                          : group_from_json(j.at("group"));
  const auto& s = j.at("space");
  BoundedKanComplex space;
  if (s.is_object() && s.contains("discrete")) {
    space = discrete(s.at("discrete").get<std::size_t>());
  } else if (s.is_object()) {
    space = require_kan(complex_from_json(s).data);
  } else if (s.is_string()) {
    space = load_kan_complex(base_dir / s.get<std::string>());
  } else {
    throw InvalidData("\"space\" must be {\"discrete\": n}, a complex or a file name");
  }
  if (j.contains("vertices")) {
    return GroupAction::on_vertices(std::move(group), std::move(space),
                                    field<std::vector<std::vector<SimplexId>>>(j, "vertices"));
  }
  return GroupAction(std::move(group), std::move(space),
                     field<std::vector<std::vector<std::vector<SimplexId>>>>(j, "levels"));
}

nlohmann::json action_to_json(const GroupAction& a) {
  return {{"group", group_to_json(a.group())},
          {"space", complex_to_json(a.space().data())},
          {"levels", a.table()}};
}

}  // namespace tcs
