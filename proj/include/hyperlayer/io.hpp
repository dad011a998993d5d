#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlayer/hypergraph.hpp"
#include "hyperlayer/sym_tensor.hpp"

namespace hyperlayer::io {

/// A hypergraph parsed from a text file, with the label of every vertex id
/// (labels[id - 1]) and the 1-based source line of every hyperedge.
struct LabeledHypergraph {
  Hypergraph graph;
  std::vector<std::string> labels;
  std::vector<std::size_t> edge_lines;
};

/// One hyperedge per line, whitespace-separated labels, `#` to end of line is
/// a comment. Labels become ids in order of first appearance.
LabeledHypergraph read_hypergraph(std::istream& in);

/// Lines `# label <id> <label>`.
void write_label_comments(std::ostream& out, std::span<const std::string> labels);

/// One line per hyperedge, vertex ids as labels.
void write_hypergraph(std::ostream& out, const Hypergraph& h);

struct CooDocument {
  SymSparseTensor tensor{1, 0};
  std::size_t n = 0;
  /// From `# label` comments, if any.
  std::vector<std::string> labels;
};

/// Optional label comments, then `order=k dim=d n=n format=canonical-coo`,
/// then one `i_1 ... i_k p/q` line per canonical entry in lexicographic order.
void write_coo(std::ostream& out, const SymSparseTensor& t, std::size_t n,
               std::span<const std::string> labels = {});

CooDocument read_coo(std::istream& in);

/// Strict `p/q`: q > 0 and gcd(p, q) = 1.
Rational parse_rational(std::string_view text);

}  // namespace hyperlayer::io
