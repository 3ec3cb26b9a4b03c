#pragma once

#include "symhodge/lie_model.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace symhodge {

struct CatalogEntry {
    std::string_view id;
    std::string_view text;       // the model file, verbatim
    std::string_view provenance; // where the model comes from
    std::string_view fixture;    // expected analyze report, under tests/fixtures/
};

/// Built-in models. Every entry passes load_model and has a closed,
/// nondegenerate omega; the unit tests re-check both on each run.
inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = {
        {"t2",
         R"json({
  "name": "t2",
  "dim": 2,
  "structure": [],
  "omega": [{"i": 1, "j": 2, "c": "1"}],
  "comment": "2-torus: abelian, area form"
})json",
         "abelian Lie algebra in dimension 2 (torus T^2)", "t2.json"},
        {"t4",
         R"json({
  "name": "t4",
  "dim": 4,
  "structure": [],
  "omega": [{"i": 1, "j": 2, "c": "1"}, {"i": 3, "j": 4, "c": "1"}],
  "comment": "4-torus: abelian, standard symplectic form"
})json",
         "abelian Lie algebra in dimension 4 (torus T^4)", "t4.json"},
        {"t6",
         R"json({
  "name": "t6",
  "dim": 6,
  "structure": [],
  "omega": [{"i": 1, "j": 2, "c": "1"}, {"i": 3, "j": 4, "c": "1"}, {"i": 5, "j": 6, "c": "1"}],
  "comment": "6-torus: abelian, standard symplectic form"
})json",
         "abelian Lie algebra in dimension 6 (torus T^6)", "t6.json"},
        {"kodaira-thurston",
         R"json({
  "name": "kodaira-thurston",
  "dim": 4,
  "structure": [{"i": 1, "j": 2, "k": 4, "c": "1"}],
  "omega": [{"i": 1, "j": 3, "c": "1"}, {"i": 2, "j": 4, "c": "1"}],
  "comment": "Kodaira-Thurston nilmanifold: de4 = e1^e2"
})json",
         "nilpotent algebra (0,0,0,12); the classical symplectic non-Kahler example",
         "kodaira-thurston.json"},
        {"nil6",
         R"json({
  "name": "nil6",
  "dim": 6,
  "structure": [{"i": 1, "j": 2, "k": 5, "c": "1"}, {"i": 1, "j": 3, "k": 6, "c": "1"}],
  "omega": [{"i": 1, "j": 6, "c": "1"}, {"i": 2, "j": 5, "c": "1"}, {"i": 3, "j": 4, "c": "1"}],
  "comment": "two-step nilpotent algebra (0,0,0,0,12,13)"
})json",
         "two-step nilpotent algebra (0,0,0,0,12,13) with a closed nondegenerate omega",
         "nil6.json"},
    };
    return entries;
}

inline const CatalogEntry* catalog_find(std::string_view id)
{
    for (const auto& e : catalog())
        if (e.id == id)
            return &e;
    return nullptr;
}

inline std::vector<std::string> catalog_ids()
{
    std::vector<std::string> ids;
    for (const auto& e : catalog())
        ids.emplace_back(e.id);
    return ids;
}

inline LieModel catalog_model(std::string_view id)
{
    const CatalogEntry* e = catalog_find(id);
    if (!e)
        throw ModelError("unknown catalog id: " + std::string(id));
    return load_model(std::string(e->text));
}

} // namespace symhodge
