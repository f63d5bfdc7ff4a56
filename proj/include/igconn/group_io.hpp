#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "igconn/group.hpp"

namespace igconn {

// Group file format: {"label": str, "order": n, "table": [[...], ...]} with
// 0-based indices. A file holds one object, a JSON array of objects, or one
// object per line.
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j, std::size_t associativity_bound = 512);

// Rejects the whole input on the first invalid group; the message names the
// line (one-object-per-line form) or the array position.
std::vector<FiniteGroup> parse_group_tables(std::string_view text,
                                            std::size_t associativity_bound = 512);
std::vector<FiniteGroup> read_group_tables(const std::filesystem::path& path,
                                           std::size_t associativity_bound = 512);

struct PermutationSet {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

// One permutation in disjoint-cycle notation over 0-based points, e.g.
// "(0 1 2)(3 4)"; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// One generator per line; blank lines and lines starting with '#' are
// skipped. An optional "degree N" line fixes the degree, otherwise it is one
// more than the largest point mentioned.
PermutationSet parse_permutation_file(std::string_view text);
PermutationSet read_permutation_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace igconn
