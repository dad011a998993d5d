#include "hyperlayer/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hyperlayer::io {

namespace {

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(std::move(w));
  return words;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::size_t parse_count(std::string_view s, std::size_t line, const std::string& what) {
  if (!all_digits(s) || s.size() > 9) throw parse_error(line, "bad " + what + " '" + std::string(s) + "'");
  return std::stoul(std::string(s));
}

}  // namespace

LabeledHypergraph read_hypergraph(std::istream& in) {
  LabeledHypergraph result;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Hyperedge> edges;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto words = split_words(strip_comment(line));
    if (words.empty()) continue;
    std::vector<VertexId> vs;
    std::set<std::string> seen;
    for (const auto& w : words) {
      if (!seen.insert(w).second) throw parse_error(line_no, "label '" + w + "' repeated");
      auto [it, inserted] = ids.emplace(w, static_cast<VertexId>(ids.size() + 1));
      if (inserted) result.labels.push_back(w);
      vs.push_back(it->second);
    }
    edges.emplace_back(std::move(vs));
    result.edge_lines.push_back(line_no);
  }
  result.graph = Hypergraph(ids.size(), std::move(edges));
  return result;
}

void write_label_comments(std::ostream& out, std::span<const std::string> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "# label " << (i + 1) << ' ' << labels[i] << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    bool first = true;
    for (VertexId v : e.vertices()) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
}

void write_coo(std::ostream& out, const SymSparseTensor& t, std::size_t n,
               std::span<const std::string> labels) {
  write_label_comments(out, labels);
  out << "order=" << t.order() << " dim=" << t.dim() << " n=" << n << " format=canonical-coo\n";
  for (const auto& [tuple, value] : t.entries()) {
    for (auto i : tuple) out << i << ' ';
    out << format_rational(value) << '\n';
  }
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "value '" + std::string(text) + "' is not p/q");
  std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "value '" + std::string(text) + "' is not p/q");
  const BigInt p{std::string(num)};
  const BigInt q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw Error(ErrorCode::ParseError, "value '" + std::string(text) + "' not in lowest terms");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

CooDocument read_coo(std::istream& in) {
  CooDocument doc;
  std::map<std::size_t, std::string> labels;
  bool have_header = false;
  std::size_t order = 0, dim = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const auto words = split_words(line.substr(hash + 1));
      if (!have_header && words.size() == 3 && words[0] == "label")
        labels[parse_count(words[1], line_no, "label id")] = words[2];
    }
    const auto words = split_words(strip_comment(line));
    if (words.empty()) continue;

    if (!have_header) {
      std::map<std::string, std::string> fields;
      for (const auto& w : words) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw parse_error(line_no, "expected key=value header");
        fields[w.substr(0, eq)] = w.substr(eq + 1);
      }
      if (fields.size() != 4 || !fields.count("order") || !fields.count("dim") ||
          !fields.count("n") || fields["format"] != "canonical-coo")
        throw parse_error(line_no, "header must be 'order=k dim=d n=n format=canonical-coo'");
      order = parse_count(fields["order"], line_no, "order");
      dim = parse_count(fields["dim"], line_no, "dim");
      doc.n = parse_count(fields["n"], line_no, "n");
      if (order == 0) throw parse_error(line_no, "order must be positive");
      doc.tensor = SymSparseTensor(order, dim);
      have_header = true;
      continue;
    }

    if (words.size() != order + 1)
      throw parse_error(line_no, "expected " + std::to_string(order) + " indices and a value");
    IndexTuple tuple;
    for (std::size_t m = 0; m < order; ++m) {
      const std::size_t idx = parse_count(words[m], line_no, "index");
      if (idx == 0 || idx > dim) throw parse_error(line_no, "index " + words[m] + " outside 1..dim");
      if (!tuple.empty() && idx < tuple.back())
        throw parse_error(line_no, "indices are not non-decreasing");
      tuple.push_back(static_cast<std::uint32_t>(idx));
    }
    Rational value;
    try {
      value = parse_rational(words[order]);
    } catch (const Error& e) {
      throw parse_error(line_no, e.what());
    }
    if (value == 0) throw parse_error(line_no, "zero value stored");
    if (doc.tensor.entries().count(tuple)) throw parse_error(line_no, "duplicate entry");
    doc.tensor.set(std::move(tuple), value);
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing canonical-coo header");
  for (std::size_t id = 1; labels.count(id); ++id) doc.labels.push_back(labels[id]);
  return doc;
}

}  // namespace hyperlayer::io
