#include "primroot/applications.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "primroot/circulant.hpp"
#include "primroot/exact_linalg.hpp"

namespace primroot {

LinearCode::LinearCode(OddPrime p, std::vector<std::vector<std::int64_t>> generator)
    : p_(p), length_(generator.empty() ? 0 : generator.front().size()),
      generator_(std::move(generator)) {
  IntegerMatrix m(generator_.size(), length_);
  for (std::size_t i = 0; i < generator_.size(); ++i) {
    if (generator_[i].size() != length_) throw std::invalid_argument("LinearCode: ragged generator");
    for (std::size_t j = 0; j < length_; ++j) {
      const auto v = generator_[i][j];
      if (v < 0 || v >= p.value()) throw std::invalid_argument("LinearCode: entry outside F_p");
      m(i, j) = static_cast<long>(v);
    }
  }
  if (rank_mod_p(m, p) != generator_.size()) {
    throw std::invalid_argument("LinearCode: generator rows are linearly dependent");
  }
}

LinearCode generate_code(PrimitiveRoot g) { return block_diagonal_code(g, 1); }

LinearCode block_diagonal_code(PrimitiveRoot g, std::size_t blocks) {
  if (blocks == 0) throw std::invalid_argument("block_diagonal_code: blocks must be >= 1");
  const auto t = build_tp(g);
  const auto row0 = t.first_row();
  const std::size_t n = t.order();
  std::vector<std::vector<std::int64_t>> gen(blocks, std::vector<std::int64_t>(blocks * n, 0));
  for (std::size_t b = 0; b < blocks; ++b) {
    std::copy(row0.begin(), row0.end(), gen[b].begin() + static_cast<std::ptrdiff_t>(b * n));
  }
  return LinearCode(g.prime(), std::move(gen));
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code) {
  const auto p = static_cast<std::uint64_t>(code.prime().value());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (total > kMaxEnumeratedCodewords / p) {
      throw std::length_error("code has more than 10^7 codewords; enumeration refused");
    }
    total *= p;
  }
  const auto mod = code.prime().value();
  const auto& gen = code.generator();
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  std::vector<std::int64_t> message(code.dimension(), 0);
  std::vector<std::int64_t> word(code.length(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::size_t weight = 0;
    for (std::size_t j = 0; j < code.length(); ++j) {
      std::int64_t c = 0;
      for (std::size_t i = 0; i < code.dimension(); ++i) c += message[i] * gen[i][j];
      if (c % mod != 0) ++weight;
    }
    ++counts[weight];
    // odometer increment over F_p^dimension
    for (std::size_t i = 0; i < message.size(); ++i) {
      if (++message[i] < mod) break;
      message[i] = 0;
    }
  }
  return counts;
}

std::size_t min_distance(const LinearCode& code) {
  const auto counts = weight_distribution(code);
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  return 0;  // dimension 0: no nonzero codeword
}

GraphSpectrumSummary graph_spectrum_summary(PrimitiveRoot g) {
  const auto s = eigenvalues(build_tp(g));
  GraphSpectrumSummary out;
  out.p = g.prime().value();
  out.g = g.value();
  out.num_vertices = g.prime().group_order();
  out.nonzero_eigenvalues = s.nonzero_count;
  out.zero_multiplicity = out.num_vertices - s.nonzero_count;
  out.spectrum = s.eigenvalues;
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list") return GraphFormat::kEdgeList;
  if (name == "adjacency") return GraphFormat::kAdjacency;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected edge_list or adjacency)");
}

std::string export_graph(PrimitiveRoot g, GraphFormat format) {
  const auto t = build_tp(g);
  std::ostringstream os;
  if (format == GraphFormat::kAdjacency) {
    return to_text(t);
  }
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) os << i << ' ' << j << ' ' << t(i, j) << '\n';
  }
  return os.str();
}

}  // namespace primroot
