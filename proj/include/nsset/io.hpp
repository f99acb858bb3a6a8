#pragma once

#include <json.hpp>
#include <string>

#include "nsset/poset.hpp"
#include "nsset/subcomplex.hpp"

namespace nsset {

// Canonical text formats.  Objects serialize with lexicographically sorted
// keys and compact whitespace, so print . parse and parse . print are both
// the identity on canonical documents.

nlohmann::json complex_to_json(const FinSimpSet& x);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const FinPoset& p, bool hasse = false);
FinPoset poset_from_json(const nlohmann::json& j);

// Subcomplexes carry their ambient complex inline.
nlohmann::json subcomplex_to_json(const Subcomplex& a);
Subcomplex subcomplex_from_json(const nlohmann::json& j);

// Maps carry source and target inline.
nlohmann::json map_to_json(const SimpMap& f);
SimpMap map_from_json(const nlohmann::json& j);

std::string canonical_dump(const nlohmann::json& j);

std::string encode_normal_simplex(const NormalSimplex& s);
NormalSimplex decode_normal_simplex(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace nsset
