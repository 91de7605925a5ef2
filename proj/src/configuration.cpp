#include "latgrade/configuration.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "latgrade/errors.hpp"

namespace latgrade {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(vertex_count)
{
    for (auto [i, j] : edges)
        add_edge(i, j);
}

void Graph::add_edge(std::size_t i, std::size_t j)
{
    if (i == j)
        throw PreconditionError("graph loops are not allowed");
    if (i == 0 || j == 0 || i > n_ || j > n_)
        throw DimensionError("edge endpoint out of range");
    if (i > j)
        std::swap(i, j);
    auto e = std::make_pair(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw PreconditionError("multi-edges are not allowed");
    edges_.insert(it, e);
}

bool Graph::adjacent(std::size_t i, std::size_t j) const
{
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

bool Graph::is_bipartite() const
{
    std::vector<int> side(n_ + 1, -1);
    std::vector<std::vector<std::size_t>> adj(n_ + 1);
    for (auto [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (std::size_t s = 1; s <= n_; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto w : adj[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::size_t Graph::component_count() const
{
    std::vector<std::size_t> parent(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i)
        parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t count = n_;
    for (auto [i, j] : edges_) {
        auto a = find(i), b = find(j);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

IntVector Circuit::positive_part() const
{
    IntVector out(vector.size(), Integer(0));
    for (std::size_t i = 0; i < vector.size(); ++i)
        if (vector[i] > 0)
            out[i] = vector[i];
    return out;
}

IntVector Circuit::negative_part() const
{
    IntVector out(vector.size(), Integer(0));
    for (std::size_t i = 0; i < vector.size(); ++i)
        if (vector[i] < 0)
            out[i] = -vector[i];
    return out;
}

IndexSet Circuit::support() const
{
    IndexSet s;
    for (std::size_t i = 0; i < vector.size(); ++i)
        if (vector[i] != 0)
            s.push_back(i);
    return s;
}

namespace {

std::string edge_label(std::size_t i, std::size_t j)
{
    if (i < 10 && j < 10)
        return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + "_" + std::to_string(j);
}

Circuit canonical(IntVector v)
{
    v = primitive(v);
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0)
                for (auto& y : v)
                    y = -y;
            break;
        }
    return Circuit{std::move(v)};
}

void sort_circuits(std::vector<Circuit>& cs)
{
    std::sort(cs.begin(), cs.end(), [](const Circuit& a, const Circuit& b) {
        auto sa = a.support(), sb = b.support();
        if (sa.size() != sb.size())
            return sa.size() < sb.size();
        if (sa != sb)
            return sa < sb;
        return a.vector < b.vector;
    });
}

} // namespace

VectorConfiguration graph_configuration(const Graph& g)
{
    if (g.edges().empty())
        throw PreconditionError("graph has no edges");
    std::vector<IntVector> cols;
    std::vector<std::string> labels;
    for (auto [i, j] : g.edges()) {
        IntVector c(g.vertex_count(), Integer(0));
        c[i - 1] = 1;
        c[j - 1] = 1;
        cols.push_back(std::move(c));
        labels.push_back(edge_label(i, j));
    }
    return VectorConfiguration(g.vertex_count(), std::move(cols), std::move(labels));
}

std::vector<Circuit> circuits(const VectorConfiguration& a, std::size_t budget)
{
    const std::size_t n = a.size();
    if (n > budget)
        throw BudgetExceeded("configuration has more columns than the circuit enumeration budget");
    const std::size_t r = rank(a.matrix());
    std::vector<Circuit> out;
    // Supports of circuits have at most rank + 1 elements.
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size < 2 && !(size == 1 && is_zero(a.column(static_cast<std::size_t>(__builtin_ctzll(mask))))))
            continue;
        if (size > r + 1)
            continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                idx.push_back(i);
        IntMatrix sub(a.ambient_dim(), idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (std::size_t d = 0; d < a.ambient_dim(); ++d)
                sub(d, k) = a.column(idx[k])[d];
        Lattice ker = kernel_basis(sub);
        if (ker.rank() != 1)
            continue;
        IntVector k = ker.basis().row(0);
        if (std::any_of(k.begin(), k.end(), [](const Integer& x) { return x == 0; }))
            continue; // support is smaller; found at that subset
        IntVector full(n, Integer(0));
        for (std::size_t t = 0; t < idx.size(); ++t)
            full[idx[t]] = k[t];
        out.push_back(canonical(std::move(full)));
    }
    sort_circuits(out);
    return out;
}

std::vector<Circuit> graph_circuits(const Graph& g)
{
    if (!g.is_bipartite())
        throw PreconditionError("graph_circuits needs a bipartite graph; use circuits() instead");
    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();
    auto edge_index = [&](std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        return static_cast<std::size_t>(
            std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j)) - edges.begin());
    };
    std::vector<std::vector<std::size_t>> adj(n + 1);
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());

    std::vector<Circuit> out;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n + 1, false);
    // Cycles rooted at their smallest vertex; the reflection is dropped by
    // requiring the second vertex to be smaller than the last.
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t v) {
        for (auto w : adj[v]) {
            if (w < root)
                continue;
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                IntVector vec(edges.size(), Integer(0));
                for (std::size_t k = 0; k < path.size(); ++k) {
                    std::size_t a = path[k], b = path[(k + 1) % path.size()];
                    vec[edge_index(a, b)] = (k % 2 == 0) ? 1 : -1;
                }
                out.push_back(canonical(std::move(vec)));
                continue;
            }
            if (w == root || on_path[w])
                continue;
            on_path[w] = true;
            path.push_back(w);
            dfs(root, w);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (std::size_t root = 1; root <= n; ++root) {
        path = {root};
        on_path[root] = true;
        dfs(root, root);
        on_path[root] = false;
    }
    sort_circuits(out);
    return out;
}

std::size_t height(const Lattice& l)
{
    return l.rank();
}

IntVector monomial_degree(const IntVector& u, const VectorConfiguration& a)
{
    if (u.size() != a.size())
        throw DimensionError("exponent vector length differs from the number of columns");
    IntVector d(a.ambient_dim(), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (u[i] != 0)
            for (std::size_t k = 0; k < a.ambient_dim(); ++k)
                d[k] += u[i] * a.column(i)[k];
    return d;
}

namespace {

std::vector<IntVector> monomial_columns(const IntVector& u, const VectorConfiguration& a)
{
    std::vector<IntVector> cols;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (u[i] != 0)
            cols.push_back(a.column(i));
    return cols;
}

RationalCone nonface_cone(const NonfaceFamily& nf, const IndexSet& e, std::size_t dim)
{
    std::vector<IntVector> gens;
    for (auto r : e)
        gens.push_back(nf.rays[r]);
    return RationalCone(dim, gens);
}

bool all_in(const std::vector<IntVector>& vs, const RationalCone& c)
{
    for (const auto& v : vs)
        if (!cone_membership(v, c))
            return false;
    return true;
}

} // namespace

std::optional<std::size_t> cone_of_monomial(const IntVector& u, const VectorConfiguration& a,
                                            const NonfaceFamily& nonfaces)
{
    if (u.size() != a.size())
        throw DimensionError("exponent vector length differs from the number of columns");
    // An extreme ray lies in sigma(E) only if it belongs to E, so sigma(E_i) sits inside every
    // sigma(E) containing A_N exactly when no ray of E_i can be dropped from the full ray set.
    const auto cols = monomial_columns(u, a);
    const std::size_t t = nonfaces.rays.size();
    std::vector<std::optional<bool>> essential(t);
    auto is_essential = [&](std::size_t r) {
        if (!essential[r]) {
            IndexSet rest;
            for (std::size_t k = 0; k < t; ++k)
                if (k != r)
                    rest.push_back(k);
            essential[r] = !all_in(cols, nonface_cone(nonfaces, rest, a.ambient_dim()));
        }
        return *essential[r];
    };
    for (std::size_t i = 0; i < nonfaces.minimal_nonfaces.size(); ++i) {
        const IndexSet& e = nonfaces.minimal_nonfaces[i];
        if (std::all_of(e.begin(), e.end(), is_essential) &&
            all_in(cols, nonface_cone(nonfaces, e, a.ambient_dim())))
            return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> cone_of_monomial_by_definition(const IntVector& u, const VectorConfiguration& a,
                                                          const NonfaceFamily& nonfaces, std::size_t max_rays)
{
    if (u.size() != a.size())
        throw DimensionError("exponent vector length differs from the number of columns");
    const std::size_t t = nonfaces.rays.size();
    if (t > max_rays)
        throw BudgetExceeded("too many extreme rays for the definitional cone(N) computation");
    const auto cols = monomial_columns(u, a);
    // Every E with A_N inside sigma(E).
    std::vector<RationalCone> containing;
    for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
        IndexSet e;
        for (std::size_t r = 0; r < t; ++r)
            if (mask & (std::size_t{1} << r))
                e.push_back(r);
        RationalCone c = nonface_cone(nonfaces, e, a.ambient_dim());
        if (all_in(cols, c))
            containing.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < nonfaces.minimal_nonfaces.size(); ++i) {
        RationalCone ci = nonface_cone(nonfaces, nonfaces.minimal_nonfaces[i], a.ambient_dim());
        if (!all_in(cols, ci))
            continue;
        bool below_all = true;
        for (const auto& c : containing)
            if (!all_in(ci.generators(), c)) {
                below_all = false;
                break;
            }
        if (below_all)
            return i;
    }
    return std::nullopt;
}

} // namespace latgrade
