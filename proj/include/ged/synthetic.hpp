#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ged/graph.hpp"

namespace ged {

/// Label token number `index` of an alphabet: "a".."z", then "l26", "l27", ...
std::string alphabet_label(std::size_t index);

/// Erdos-Renyi style graph: node labels uniform over the first
/// `label_alphabet_size` tokens, each unordered pair joined with probability
/// `edge_density`. Edge labels are uniform over `edge_alphabet_size` tokens
/// "1", "2", ... Throws ParameterError for density outside [0, 1] or an
/// empty alphabet.
LabeledGraph generate_synthetic(std::size_t num_nodes, double edge_density, std::size_t label_alphabet_size,
                                std::uint64_t seed, std::size_t edge_alphabet_size = 1, std::string id = "");

/// `count` graphs with ids <prefix>1..<prefix>count, graph i seeded with
/// derive_seed(seed, i).
std::vector<LabeledGraph> generate_synthetic_dataset(std::size_t count, std::size_t num_nodes, double edge_density,
                                                     std::size_t label_alphabet_size, std::uint64_t seed,
                                                     std::size_t edge_alphabet_size = 1,
                                                     const std::string& prefix = "g");

}  // namespace ged
