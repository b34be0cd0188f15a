#include "ged/synthetic.hpp"

#include "ged/errors.hpp"
#include "ged/rng.hpp"

namespace ged {

std::string alphabet_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "l" + std::to_string(index);
}

LabeledGraph generate_synthetic(std::size_t num_nodes, double edge_density, std::size_t label_alphabet_size,
                                std::uint64_t seed, std::size_t edge_alphabet_size, std::string id) {
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) throw ParameterError("edge density must lie in [0, 1]");
  if (label_alphabet_size == 0 || edge_alphabet_size == 0) throw ParameterError("label alphabets must be nonempty");
  Rng rng(seed);
  LabeledGraph graph(id.empty() ? "syn" + std::to_string(seed) : std::move(id));
  for (std::size_t i = 0; i < num_nodes; ++i) graph.add_node(alphabet_label(rng.uniform_index(label_alphabet_size)));
  for (NodeId a = 0; a < num_nodes; ++a) {
    for (NodeId b = a + 1; b < num_nodes; ++b) {
      // uniform01 < 1 always holds, so density 1 yields the complete graph.
      if (rng.uniform01() < edge_density) {
        graph.add_edge(a, b, std::to_string(1 + rng.uniform_index(edge_alphabet_size)));
      }
    }
  }
  return graph;
}

std::vector<LabeledGraph> generate_synthetic_dataset(std::size_t count, std::size_t num_nodes, double edge_density,
                                                     std::size_t label_alphabet_size, std::uint64_t seed,
                                                     std::size_t edge_alphabet_size, const std::string& prefix) {
  std::vector<LabeledGraph> graphs;
  graphs.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    graphs.push_back(generate_synthetic(num_nodes, edge_density, label_alphabet_size, derive_seed(seed, i),
                                        edge_alphabet_size, prefix + std::to_string(i)));
  }
  return graphs;
}

}  // namespace ged
