#pragma once

// Derived objects: the linear code spanned by T_p over F_p, its block-diagonal
// extensions, and T_p read as a weighted circulant graph.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "primroot/characters.hpp"
#include "primroot/ff_arith.hpp"

namespace primroot {

/// Linear code over F_p given by a full-rank generator matrix.
class LinearCode {
 public:
  /// Throws std::invalid_argument if the rows are ragged, entries fall outside
  /// {0, ..., p-1}, or the rows are linearly dependent over F_p.
  LinearCode(OddPrime p, std::vector<std::vector<std::int64_t>> generator);

  OddPrime prime() const { return p_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return generator_.size(); }
  const std::vector<std::vector<std::int64_t>>& generator() const { return generator_; }

 private:
  OddPrime p_;
  std::size_t length_;
  std::vector<std::vector<std::int64_t>> generator_;
};

/// One-dimensional code generated by the first row of T_p mod p.
LinearCode generate_code(PrimitiveRoot g);

/// `blocks` copies of the generator row on a block diagonal. Throws for blocks == 0.
LinearCode block_diagonal_code(PrimitiveRoot g, std::size_t blocks);

/// Codes with more than this many codewords are not enumerated.
inline constexpr std::uint64_t kMaxEnumeratedCodewords = 10'000'000;

/// counts[w] = number of codewords of Hamming weight w, w = 0..length.
/// Exhaustive over all p^dimension messages; throws std::length_error past the bound.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code);

/// Smallest weight of a nonzero codeword (exhaustive enumeration).
std::size_t min_distance(const LinearCode& code);

struct GraphSpectrumSummary {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::int64_t num_vertices = 0;
  std::int64_t nonzero_eigenvalues = 0;
  std::int64_t zero_multiplicity = 0;
  std::vector<Complex> spectrum;
};

GraphSpectrumSummary graph_spectrum_summary(PrimitiveRoot g);

enum class GraphFormat { kEdgeList, kAdjacency };

/// "edge_list" or "adjacency"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(std::string_view name);

/// Directed weighted graph on 0..p-2 with edge i -> j of weight T_p(i, j), self-loops
/// included. Edge list: one "i j w" line per edge. Adjacency: the rows of T_p as text.
std::string export_graph(PrimitiveRoot g, GraphFormat format);

}  // namespace primroot
