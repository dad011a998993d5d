#include "hyperlayer/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hyperlayer/e_adjacency.hpp"
#include "hyperlayer/io.hpp"
#include "hyperlayer/uniformisation.hpp"

namespace hyperlayer::cli {

namespace {

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const NoConvergenceError& e) {
    err << std::setprecision(17) << "lambda_lower=" << e.lower() << '\n'
        << "lambda_upper=" << e.upper() << '\n'
        << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

template <typename Fn>
auto with_input(const std::string& path, std::istream& stdin_stream, Fn&& fn) {
  if (path == "-") return fn(stdin_stream);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return fn(file);
}

/// Parses the input and checks the tensor preconditions, naming the source
/// lines of a repeated hyperedge.
io::LabeledHypergraph load_tensor_ready(const std::string& path, std::istream& in) {
  auto parsed = with_input(path, in, [](std::istream& s) { return io::read_hypergraph(s); });
  if (parsed.graph.empty()) throw Error(ErrorCode::EmptyHypergraph, "input has no hyperedge");
  if (auto rep = parsed.graph.find_repeated_hyperedge()) {
    throw Error(ErrorCode::RepeatedHyperedge,
                "lines " + std::to_string(parsed.edge_lines[rep->first]) + " and " +
                    std::to_string(parsed.edge_lines[rep->second]) + " hold the same hyperedge");
  }
  return parsed;
}

std::string special_label(std::size_t level) { return "@y" + std::to_string(level); }

}  // namespace

int build(const std::string& input, const std::string& output, Streams io) {
  return guarded(io.err, [&] {
    const auto parsed = load_tensor_ready(input, io.in);
    const auto tensor = build_e_adjacency(parsed.graph);
    const std::size_t n = parsed.graph.vertex_count();
    if (output.empty() || output == "-") {
      io::write_coo(io.out, tensor, n, parsed.labels);
    } else {
      std::ofstream file(output);
      if (!file) throw Error(ErrorCode::IoError, "cannot write '" + output + "'");
      io::write_coo(file, tensor, n, parsed.labels);
    }
    io.err << "n=" << n << " k_max=" << tensor.order() << " edges=" << parsed.graph.edge_count()
           << " dim=" << tensor.dim() << " nonzeros=" << tensor.nonzero_count() << '\n';
  });
}

int stats(const std::string& input, Streams io) {
  return guarded(io.err, [&] {
    const auto parsed = load_tensor_ready(input, io.in);
    const Hypergraph& h = parsed.graph;
    const auto tensor = build_e_adjacency(h);
    const auto report = degrees_from_tensor(tensor, h.vertex_count());

    const auto direct_degrees = vertex_degrees(h);
    bool degrees_ok = true;
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
      degrees_ok = degrees_ok && report.d[i] == direct_degrees[i];
    const auto layers = decompose_layers(h);
    bool layers_ok = layers.size() == report.layer_counts.size();
    for (std::size_t j = 0; layers_ok && j < layers.size(); ++j)
      layers_ok = layers[j].edge_count() == report.layer_counts[j];
    const bool handshake_ok = handshake_edge_count(tensor) == Rational(h.edge_count());

    std::ostream& out = io.out;
    io::write_label_comments(out, parsed.labels);
    out << "n=" << h.vertex_count() << '\n'
        << "k_max=" << report.k_max << '\n'
        << "edges=" << h.edge_count() << '\n'
        << "dim=" << tensor.dim() << '\n';
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
      out << "d_" << parsed.labels[i] << '=' << report.d[i] << '\n';
    const auto special = report.special_degrees();
    for (std::size_t l = 0; l < special.size(); ++l)
      out << "d_" << special_label(l + 1).substr(1) << '=' << special[l] << '\n';
    for (std::size_t j = 0; j < report.layer_counts.size(); ++j)
      out << "layer_count_" << (j + 1) << '=' << report.layer_counts[j] << '\n';
    out << "degree_check=" << (degrees_ok ? "pass" : "fail") << '\n'
        << "layer_count_check=" << (layers_ok ? "pass" : "fail") << '\n'
        << "handshake=" << (handshake_ok ? "pass" : "fail") << '\n'
        << "Delta=" << report.max_degree() << '\n'
        << "DeltaStar=" << report.max_special_degree() << '\n'
        << "bound=" << std::max(report.max_degree(), report.max_special_degree()) << '\n';
    if (!degrees_ok || !layers_ok || !handshake_ok)
      throw Error(ErrorCode::MalformedTensor, "tensor-derived statistics disagree with the input");
  });
}

int spectral(const std::string& input, const EigenOptions& options, Streams io) {
  return guarded(io.err, [&] {
    const auto parsed = load_tensor_ready(input, io.in);
    const auto tensor = build_e_adjacency(parsed.graph);
    if (tensor.order() < 2)
      throw Error(ErrorCode::OrderTooSmall, "range 1 gives an order-1 tensor; no H-eigenvalue");
    const auto report = degrees_from_tensor(tensor, parsed.graph.vertex_count());
    const double bound = spectral_bound(report);
    const auto result = largest_h_eigenvalue(tensor, options);
    io.out << std::setprecision(17) << "lambda=" << result.lambda << '\n'
           << "bound=" << bound << '\n'
           << "bound_satisfied=" << (result.lambda <= bound + 1e-6 ? "true" : "false") << '\n'
           << "iterations=" << result.iterations << '\n'
           << "residual=" << result.residual << '\n';
  });
}

int reconstruct(const std::string& input, std::optional<std::size_t> n, Streams io) {
  return guarded(io.err, [&] {
    const auto doc = with_input(input, io.in, [](std::istream& s) { return io::read_coo(s); });
    const Hypergraph h = hyperlayer::reconstruct(doc.tensor, n.value_or(doc.n));
    io::write_hypergraph(io.out, h);
  });
}

int uniformise(const std::string& input, Streams io) {
  return guarded(io.err, [&] {
    const auto parsed = load_tensor_ready(input, io.in);
    const auto u = hyperlayer::uniformise(parsed.graph);
    io::write_label_comments(io.out, parsed.labels);
    for (std::size_t e = 0; e < u.graph.edge_count(); ++e) {
      for (VertexId v : u.graph.edges()[e].vertices()) {
        if (u.is_special(v))
          io.out << special_label(v - u.original_vertex_count);
        else
          io.out << parsed.labels[v - 1];
        io.out << ' ';
      }
      io.out << "w=" << format_rational(u.graph.weights()[e]) << '\n';
    }
  });
}

}  // namespace hyperlayer::cli
