#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hyperlayer/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Layered e-adjacency tensors of general hypergraphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  hyperlayer::EigenOptions eigen;
  std::optional<std::size_t> n;

  auto* build = app.add_subcommand("build", "Write the layered e-adjacency tensor as canonical COO");
  build->add_option("input", input, "Hypergraph file, '-' for stdin")->required();
  build->add_option("-o,--output", output, "Tensor file, '-' for stdout");

  auto* stats = app.add_subcommand("stats", "Degrees, layer counts, handshake check and bound");
  stats->add_option("input", input, "Hypergraph file, '-' for stdin")->required();

  auto* spectral = app.add_subcommand("spectral", "Largest H-eigenvalue against the degree bound");
  spectral->add_option("input", input, "Hypergraph file, '-' for stdin")->required();
  spectral->add_option("--tol", eigen.tolerance, "Perron bracket width")->check(CLI::PositiveNumber);
  spectral->add_option("--max-iter", eigen.max_iterations, "Iteration cap");

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the hypergraph from a tensor file");
  reconstruct->add_option("input", input, "Tensor file, '-' for stdin")->required();
  reconstruct->add_option("--n", n, "Original vertex count (defaults to the header)");

  auto* uniformise = app.add_subcommand("uniformise", "List the weighted uniformised hypergraph");
  uniformise->add_option("input", input, "Hypergraph file, '-' for stdin")->required();

  CLI11_PARSE(app, argc, argv);

  hyperlayer::cli::Streams io{std::cin, std::cout, std::cerr};
  if (*build) return hyperlayer::cli::build(input, output, io);
  if (*stats) return hyperlayer::cli::stats(input, io);
  if (*spectral) return hyperlayer::cli::spectral(input, eigen, io);
  if (*reconstruct) return hyperlayer::cli::reconstruct(input, n, io);
  if (*uniformise) return hyperlayer::cli::uniformise(input, io);
  return 1;
}
