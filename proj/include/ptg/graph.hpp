#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ptg {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as a dense adjacency
/// matrix. Loops and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int size() const noexcept { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int u) const;
  std::vector<int> closed_neighborhood(int u) const;
  int degree(int u) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<char> adj_;
};

/// Simple loop-free digraph on vertices 0..n-1.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Edge> arcs);
  Digraph(int n, std::initializer_list<Edge> arcs)
      : Digraph(n, std::span<const Edge>(arcs.begin(), arcs.size())) {}

  int size() const noexcept { return n_; }
  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);

  std::vector<Edge> arcs() const;
  std::vector<int> out_neighbors(int u) const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<char> adj_;
};

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols, bool fill = false);

  /// Builds a matrix from strings of '0'/'1' characters, one per row.
  static BinaryMatrix from_rows(std::span<const std::string> rows);
  static BinaryMatrix from_rows(std::initializer_list<std::string> rows) {
    return from_rows(std::span<const std::string>(rows.begin(), rows.size()));
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool at(int i, int j) const { return bits_[index(i, j)] != 0; }
  void set(int i, int j, bool value) { bits_[index(i, j)] = value ? 1 : 0; }

  BinaryMatrix transpose() const;
  std::vector<std::string> to_rows() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<char> bits_;
};

/// A vertex permutation: perm[k] is the vertex placed at position k.
struct Ordering {
  std::vector<int> perm;

  static Ordering identity(int n);

  int size() const noexcept { return static_cast<int>(perm.size()); }
  int operator[](int k) const { return perm[static_cast<std::size_t>(k)]; }

  /// Inverse map: position()[v] is the position of vertex v.
  std::vector<int> position() const;

  /// Throws InvalidInput unless perm is a permutation of 0..n-1.
  void validate(int n) const;

  bool operator==(const Ordering&) const = default;
};

struct ReducedGraph {
  Graph graph;
  std::vector<int> class_of;               // original vertex -> class index
  std::vector<std::vector<int>> classes;   // class index -> original vertices
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // subgraph vertex -> original vertex
};

BinaryMatrix augmented_adjacency(const Graph& g, const Ordering& ord);
BinaryMatrix augmented_adjacency(const Digraph& d, const Ordering& ord);

BinaryMatrix wedge(const BinaryMatrix& a, const BinaryMatrix& b);

/// Keeps an undirected edge {i, j} exactly when both arcs i->j and j->i exist.
Graph intersect_transpose(const Digraph& d);

/// Quotient by equal closed neighborhoods. Classes are numbered by their
/// smallest member.
ReducedGraph reduced_graph(const Graph& g);

/// G(n, r): i ~ j iff 0 < |i - j| <= r.
Graph generate_gnr(int n, int r);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
InducedSubgraph common_neighborhood_subgraph(const Graph& g, int u, int v);

bool is_tournament(const Digraph& d);

/// True iff the 1-entries of every row form one contiguous block of columns
/// in the matrix as given (no column permutation is searched).
bool check_c1p_rows(const BinaryMatrix& m);

// Small named families used throughout the tests and the catalog.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // vertex 0 is the hub
Graph complement(const Graph& g);
Digraph symmetric_digraph(const Graph& g);

}  // namespace ptg
