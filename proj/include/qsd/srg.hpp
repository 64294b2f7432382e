#pragma once

// Strongly regular graphs: spectral parameter algebra, adjacency-matrix
// ingestion and recognition, minimal idempotents, and the two invariants a
// graph contributes to the p-adic feasibility tests: the square class of a
// maximal nonsingular section of the idempotent and its Hasse invariants.

#include "qsd/quadform.hpp"

#include <variant>

namespace qsd {

class SrgError : public Error {
 public:
  using Error::Error;
};

class NotRegularError : public SrgError {
 public:
  using SrgError::SrgError;
};

class NotStronglyRegularError : public SrgError {
 public:
  using SrgError::SrgError;
};

class DisconnectedError : public SrgError {
 public:
  using SrgError::SrgError;
};

// Irrational eigenvalues: the conference case. The parameters are never
// feasible, so recognition and invariants refuse them with this signal.
class ConferenceError : public SrgError {
 public:
  using SrgError::SrgError;
};

class NoClosedFormError : public SrgError {
 public:
  using SrgError::SrgError;
};

// Eigenvalues rho > sigma with multiplicities f, g of a connected strongly
// regular graph on b = f + g + 1 vertices. Construction validates the whole
// integer consistency system, so a value of this type is always coherent.
struct SpectralParams {
  Int rho, sigma, f, g;

  SpectralParams(Int rho_, Int sigma_, Int f_, Int g_);

  Int vertices() const { return f + g + 1; }              // b
  Int degree() const { return -f * rho - g * sigma; }     // a
  Int common_adjacent() const;                            // neighbors of an edge
  Int common_nonadjacent() const;                         // neighbors of a non-edge

  bool operator==(const SpectralParams& other) const = default;
};

// The graph families with recorded parameter systems. Multipartite(m, n) is
// the complete multipartite graph with m parts of size n; CoTriangular(n) the
// complement of the triangular graph on an n-set; Symplectic(d, q) the graph
// of nonzero symplectic-form values on a 2d-dimensional space over GF(q);
// Steiner(n, m) the block graph of a Steiner system with block size n and
// replication m; Conference(q) the Paley-type parameters on q vertices.
struct Multipartite {
  Int m, n;
};
struct CoTriangular {
  Int n;
};
struct Symplectic {
  Int d, q;
};
struct Steiner {
  Int n, m;
};
struct Triangular {
  Int m;
};
struct Conference {
  Int q;
};
using GraphFamily =
    std::variant<Multipartite, CoTriangular, Symplectic, Steiner, Triangular, Conference>;

std::string family_name(const GraphFamily& fam);

// Spectral parameters of a family member. Conference(q) with non-square q
// has an irrational spectrum and throws ConferenceError.
SpectralParams family_spectral(const GraphFamily& fam);

// The invariants attached to an integral strongly regular graph: the square
// class of det E0 for a maximal nonsingular principal section E0 of the
// minimal idempotent, and its Hasse invariants at the recorded primes (+1
// at every other prime).
struct GraphInvariants {
  SquareClass delta;
  std::map<Int, int> hasse;

  int eps(const Int& p) const;
  bool operator==(const GraphInvariants& other) const;
};

// Closed forms, available for Multipartite, CoTriangular, Symplectic with
// q = 2, and Steiner; the rest throw NoClosedFormError.
GraphInvariants family_invariants(const GraphFamily& fam);

// Simple graph given by its adjacency matrix; symmetric, zero diagonal.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int n);

  int order() const { return n_; }
  bool edge(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
  void add_edge(int i, int j);
  Int degree(int i) const;

 private:
  int n_ = 0;
  std::vector<uint8_t> adj_;
};

// Parses "matrix" (whitespace-separated 0/1 rows, '#' comments) or "graph6"
// (one standard graph6 line). Errors carry line/column positions.
AdjacencyMatrix parse_graph(const std::string& text, const std::string& format);
AdjacencyMatrix read_graph(const std::string& path, const std::string& format);

// Exact recognition: regularity, connectivity, the two common-neighbor
// counts, and the integer spectrum. Irrational spectra raise
// ConferenceError; other failures raise the matching SrgError subclass.
SpectralParams srg_recognize(const AdjacencyMatrix& a);

// The rank-g minimal idempotent E = (A - rho I - ((a-rho)/b) J) / (sigma - rho).
// Verifies sp against the graph and checks E^2 = E, A E = sigma E, trace g
// and zero row sums exactly before returning.
SymMatrix minimal_idempotent(const AdjacencyMatrix& a, const SpectralParams& sp);

// Invariants per the direct construction: E0 = E[S, S] on the greedy leftmost
// independent column set S of E.
GraphInvariants graph_invariants_direct(const AdjacencyMatrix& a);

}  // namespace qsd
