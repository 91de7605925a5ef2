#pragma once

#include <utility>

#include "latgrade/cone.hpp"
#include "latgrade/vector_configuration.hpp"

namespace latgrade {

/// Simple undirected graph on vertices 1..vertex_count; edges stored as i < j.
class Graph {
public:
    explicit Graph(std::size_t vertex_count = 0) : n_(vertex_count) {}
    Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    /// Sorted lexicographically, 1-based.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    bool adjacent(std::size_t i, std::size_t j) const;
    void add_edge(std::size_t i, std::size_t j);
    bool is_bipartite() const;
    std::size_t component_count() const;

    bool operator==(const Graph& other) const = default;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Primitive kernel vector of minimal support, first nonzero entry positive.
struct Circuit {
    IntVector vector;

    IntVector positive_part() const;
    IntVector negative_part() const;
    IndexSet support() const;
    bool operator==(const Circuit& other) const = default;
    auto operator<=>(const Circuit& other) const = default;
};

/// Columns e_i + e_j per edge in lexicographic edge order, labelled "ij".
VectorConfiguration graph_configuration(const Graph& g);

/// All circuits by subset enumeration, sorted by support size then support.
std::vector<Circuit> circuits(const VectorConfiguration& a, std::size_t budget = 20);
/// Circuits of a bipartite graph from its even cycles, same order as circuits().
std::vector<Circuit> graph_circuits(const Graph& g);

/// Height of the lattice ideal I_L, i.e. rank(L).
std::size_t height(const Lattice& l);

IntVector monomial_degree(const IntVector& u, const VectorConfiguration& a);

/// Index of the minimal non-face E_i with cone(x^u) = sigma(E_i), if any.
/// Polynomial time: A_N inside sigma(E_i), and no ray of E_i is redundant for
/// containing A_N.
std::optional<std::size_t> cone_of_monomial(const IntVector& u, const VectorConfiguration& a,
                                            const NonfaceFamily& nonfaces);
/// Same answer straight from the definition of cone(N); enumerates every subset of rays.
std::optional<std::size_t> cone_of_monomial_by_definition(const IntVector& u, const VectorConfiguration& a,
                                                          const NonfaceFamily& nonfaces,
                                                          std::size_t max_rays = 16);

} // namespace latgrade
