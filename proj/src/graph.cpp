#include "ptg/graph.hpp"

#include "ptg/error.hpp"

#include <algorithm>
#include <map>

namespace ptg {

namespace {

std::size_t cell(int n, int u, int v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw InvalidInput("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_), {u});
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[cell(n_, u, v)] != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u), {u});
  adj_[cell(n_, u, v)] = adj_[cell(n_, v, u)] = 1;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[cell(n_, u, v)] = adj_[cell(n_, v, u)] = 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[cell(n_, i, j)]) out.emplace_back(i, j);
  return out;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adj_[cell(n_, u, v)]) out.push_back(v);
  return out;
}

std::vector<int> Graph::closed_neighborhood(int u) const {
  auto out = neighbors(u);
  out.insert(std::lower_bound(out.begin(), out.end(), u), u);
  return out;
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Edge> arcs) : Digraph(n) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw InvalidInput("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_), {u});
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[cell(n_, u, v)] != 0;
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u), {u});
  adj_[cell(n_, u, v)] = 1;
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adj_[cell(n_, i, j)]) out.emplace_back(i, j);
  return out;
}

std::vector<int> Digraph::out_neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adj_[cell(n_, u, v)]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- BinaryMatrix

BinaryMatrix::BinaryMatrix(int rows, int cols, bool fill) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw InvalidInput("matrix dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill ? 1 : 0);
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) throw InvalidInput("matrix has no rows");
  BinaryMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != m.cols_)
      throw InvalidInput("matrix row " + std::to_string(i) + " has length " +
                             std::to_string(row.size()) + ", expected " + std::to_string(m.cols_),
                         {i});
    for (int j = 0; j < m.cols_; ++j) {
      char c = row[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw InvalidInput("matrix row " + std::to_string(i) + " contains '" + std::string(1, c) + "'", {i, j});
      m.set(i, j, c == '1');
    }
  }
  return m;
}

std::size_t BinaryMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw InvalidInput("matrix index out of range", {i, j});
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::vector<std::string> BinaryMatrix::to_rows() const {
  std::vector<std::string> out;
  for (int i = 0; i < rows_; ++i) {
    std::string row;
    for (int j = 0; j < cols_; ++j) row.push_back(at(i, j) ? '1' : '0');
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- Ordering

Ordering Ordering::identity(int n) {
  Ordering ord;
  for (int i = 0; i < n; ++i) ord.perm.push_back(i);
  return ord;
}

std::vector<int> Ordering::position() const {
  std::vector<int> pos(perm.size(), -1);
  for (int k = 0; k < size(); ++k) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
  return pos;
}

void Ordering::validate(int n) const {
  if (size() != n)
    throw InvalidInput("ordering has " + std::to_string(size()) + " entries for " + std::to_string(n) +
                       " vertices");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n) throw InvalidInput("ordering entry " + std::to_string(v) + " out of range", {v});
    if (seen[static_cast<std::size_t>(v)]) throw InvalidInput("ordering repeats vertex " + std::to_string(v), {v});
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// ---------------------------------------------------------------- operations

BinaryMatrix augmented_adjacency(const Graph& g, const Ordering& ord) {
  ord.validate(g.size());
  if (g.size() == 0) throw InvalidInput("empty graph has no augmented matrix");
  BinaryMatrix m(g.size(), g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) m.set(i, j, i == j || g.adjacent(ord[i], ord[j]));
  return m;
}

BinaryMatrix augmented_adjacency(const Digraph& d, const Ordering& ord) {
  ord.validate(d.size());
  if (d.size() == 0) throw InvalidInput("empty digraph has no augmented matrix");
  BinaryMatrix m(d.size(), d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) m.set(i, j, i == j || d.has_arc(ord[i], ord[j]));
  return m;
}

BinaryMatrix wedge(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput("wedge of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                       std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " matrices");
  BinaryMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j) && b.at(i, j));
  return c;
}

Graph intersect_transpose(const Digraph& d) {
  Graph g(d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.has_arc(i, j) && d.has_arc(j, i)) g.add_edge(i, j);
  return g;
}

ReducedGraph reduced_graph(const Graph& g) {
  ReducedGraph out;
  out.class_of.assign(static_cast<std::size_t>(g.size()), -1);
  std::map<std::vector<int>, int> by_neighborhood;
  for (int v = 0; v < g.size(); ++v) {
    auto [it, fresh] = by_neighborhood.try_emplace(g.closed_neighborhood(v), static_cast<int>(out.classes.size()));
    if (fresh) out.classes.emplace_back();
    out.classes[static_cast<std::size_t>(it->second)].push_back(v);
    out.class_of[static_cast<std::size_t>(v)] = it->second;
  }
  out.graph = Graph(static_cast<int>(out.classes.size()));
  for (auto [u, v] : g.edges()) {
    int a = out.class_of[static_cast<std::size_t>(u)];
    int b = out.class_of[static_cast<std::size_t>(v)];
    if (a != b) out.graph.add_edge(a, b);
  }
  return out;
}

Graph generate_gnr(int n, int r) {
  if (r < 1) throw InvalidInput("G(n,r) needs r >= 1");
  if (n <= r) throw InvalidInput("G(n,r) needs n > r");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= r; ++j) g.add_edge(i, j);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  InducedSubgraph out;
  out.vertices.assign(vertices.begin(), vertices.end());
  out.graph = Graph(static_cast<int>(vertices.size()));
  for (int a = 0; a < out.graph.size(); ++a)
    for (int b = a + 1; b < out.graph.size(); ++b)
      if (g.adjacent(out.vertices[static_cast<std::size_t>(a)], out.vertices[static_cast<std::size_t>(b)]))
        out.graph.add_edge(a, b);
  return out;
}

InducedSubgraph common_neighborhood_subgraph(const Graph& g, int u, int v) {
  if (u == v) throw InvalidInput("common neighborhood needs two distinct vertices", {u});
  std::vector<int> common;
  for (int w = 0; w < g.size(); ++w)
    if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) common.push_back(w);
  return induced_subgraph(g, common);
}

bool is_tournament(const Digraph& d) {
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.has_arc(i, j) == d.has_arc(j, i)) return false;
  return true;
}

bool check_c1p_rows(const BinaryMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    int state = 0;  // 0: before the block, 1: inside, 2: after
    for (int j = 0; j < m.cols(); ++j) {
      bool bit = m.at(i, j);
      if (bit && state == 2) return false;
      if (bit) state = 1;
      else if (state == 1) state = 2;
    }
  }
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) c.add_edge(i, j);
  return c;
}

Digraph symmetric_digraph(const Graph& g) {
  Digraph d(g.size());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

}  // namespace ptg
