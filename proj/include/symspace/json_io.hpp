#pragma once

#include "json.hpp"

#include "symspace/embeddings.hpp"

namespace symspace {

using json = nlohmann::json;

// Input document schema:
//   { "root_datum": { "rank", "simple_roots", "simple_coroots", "pairing"?,
//                     "labels"? },
//     "satake":     { "I_bullet", "tau", "tau_X"?, "I_circ_prime"? },
//     "monoid"?:    { "generators": [[...], ...] },
//     "pair"?:      { "J1": [...], "J2": [...] } }
// All indices are 0-based node positions; tau_X defaults to the identity.
struct InputDocument {
  IRootDatum ird;
  std::optional<std::vector<IntVec>> monoid_generators;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> pair;
};

InputDocument parse_input(const json& doc);
InputDocument load_input_file(const std::string& path);

json to_json(const IntVec& v);
json to_json(const RatVec& v);
json to_json(const IntMat& m);
json to_json(const std::vector<IntVec>& vecs);
json to_json(const Cone& c);
json to_json(const HilbertBasis& hb);
json to_json(const EmbeddingReport& rep);
json to_json(const VeryFlatReport& rep);

}  // namespace symspace
