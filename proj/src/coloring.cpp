#include "latgrade/coloring.hpp"

#include <algorithm>
#include <bit>

#include "latgrade/errors.hpp"

namespace latgrade {

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& coloring)
{
    if (coloring.size() != g.vertex_count())
        return false;
    for (auto [i, j] : g.edges())
        if (coloring[i - 1] == coloring[j - 1])
            return false;
    return true;
}

namespace {

struct Search {
    std::size_t n;
    std::vector<std::vector<char>> adj;
    std::vector<std::size_t> degree;
    const SearchLimits& limits;
    std::size_t nodes = 0;
    bool aborted = false;

    std::size_t best_k;
    std::vector<std::size_t> best;
    std::vector<std::size_t> color;         // n == uncolored
    std::vector<std::vector<std::size_t>> seen; // seen[v][c]: neighbours of v with color c

    Search(const Graph& g, const SearchLimits& l) : n(g.vertex_count()), limits(l)
    {
        adj.assign(n, std::vector<char>(n, 0));
        degree.assign(n, 0);
        for (auto [i, j] : g.edges()) {
            adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1;
            ++degree[i - 1];
            ++degree[j - 1];
        }
    }

    std::size_t saturation(std::size_t v) const
    {
        std::size_t s = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (seen[v][c])
                ++s;
        return s;
    }

    // DSATUR choice: max saturation, then max degree, then lowest index.
    std::size_t pick() const
    {
        std::size_t best_v = n, best_s = 0, best_d = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != n)
                continue;
            std::size_t s = saturation(v);
            if (best_v == n || s > best_s || (s == best_s && degree[v] > best_d)) {
                best_v = v;
                best_s = s;
                best_d = degree[v];
            }
        }
        return best_v;
    }

    void assign(std::size_t v, std::size_t c, int delta)
    {
        for (std::size_t w = 0; w < n; ++w)
            if (adj[v][w])
                seen[w][c] = static_cast<std::size_t>(static_cast<long>(seen[w][c]) + delta);
    }

    void expand(std::size_t colored, std::size_t used)
    {
        if (aborted)
            return;
        ++nodes;
        if ((limits.max_nodes && nodes > limits.max_nodes) || ((nodes & 1023) == 0 && limits.expired())) {
            aborted = true;
            return;
        }
        if (colored == n) {
            if (used < best_k) {
                best_k = used;
                best = color;
            }
            return;
        }
        std::size_t v = pick();
        for (std::size_t c = 0; c <= used && c < n; ++c) {
            if (seen[v][c])
                continue;
            std::size_t next_used = std::max(used, c + 1);
            if (next_used >= best_k)
                continue;
            color[v] = c;
            assign(v, c, +1);
            expand(colored + 1, next_used);
            assign(v, c, -1);
            color[v] = n;
        }
    }
};

std::vector<std::size_t> greedy_clique(const std::vector<std::vector<char>>& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> best;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> clique{s};
        for (std::size_t v = 0; v < n; ++v) {
            if (v == s)
                continue;
            bool ok = true;
            for (auto u : clique)
                if (!adj[u][v]) {
                    ok = false;
                    break;
                }
            if (ok)
                clique.push_back(v);
        }
        if (clique.size() > best.size())
            best = clique;
    }
    return best;
}

} // namespace

ColoringResult chromatic_number(const Graph& g, const SearchLimits& limits)
{
    ColoringResult out;
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return out;
    Search s(g, limits);
    out.clique_bound = greedy_clique(s.adj).size();

    // Upper bound: plain DSATUR greedy run.
    s.color.assign(n, n);
    s.seen.assign(n, std::vector<std::size_t>(n, 0));
    std::size_t used = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = s.pick();
        std::size_t c = 0;
        while (s.seen[v][c])
            ++c;
        s.color[v] = c;
        s.assign(v, c, +1);
        used = std::max(used, c + 1);
    }
    s.best_k = used;
    s.best = s.color;

    if (used > out.clique_bound) {
        s.color.assign(n, n);
        s.seen.assign(n, std::vector<std::size_t>(n, 0));
        s.expand(0, 0);
    }
    out.chromatic_number = s.best_k;
    out.coloring = s.best;
    out.certified = !s.aborted || s.best_k == out.clique_bound;
    if (!is_proper_coloring(g, out.coloring))
        throw std::logic_error("coloring search returned an improper coloring");
    return out;
}

namespace {

struct CoverSearch {
    VertexMask universe;
    const std::vector<VertexMask>& sets;
    const SearchLimits& limits;
    std::size_t nodes = 0;
    bool aborted = false;
    std::size_t max_set = 0;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::size_t best_size = 0;

    void expand(VertexMask covered)
    {
        if (aborted)
            return;
        ++nodes;
        if ((limits.max_nodes && nodes > limits.max_nodes) || ((nodes & 1023) == 0 && limits.expired())) {
            aborted = true;
            return;
        }
        VertexMask open = universe & ~covered;
        if (open == 0) {
            if (current.size() < best_size) {
                best_size = current.size();
                best = current;
            }
            return;
        }
        const auto remaining = static_cast<std::size_t>(std::popcount(open));
        if (current.size() + (remaining + max_set - 1) / max_set >= best_size)
            return;
        // Branch on the open vertex with the fewest covering sets.
        std::size_t pick = 0, fewest = sets.size() + 1;
        for (VertexMask m = open; m; m &= m - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(m));
            std::size_t cnt = 0;
            for (auto s : sets)
                if (s & (VertexMask{1} << v))
                    ++cnt;
            if (cnt < fewest) {
                fewest = cnt;
                pick = v;
            }
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!(sets[i] & (VertexMask{1} << pick)))
                continue;
            current.push_back(i);
            expand(covered | sets[i]);
            current.pop_back();
        }
    }
};

} // namespace

CoverResult minimum_set_cover(VertexMask universe, const std::vector<VertexMask>& sets, const SearchLimits& limits)
{
    CoverResult out;
    if (universe == 0)
        return out;
    VertexMask reach = 0;
    for (auto s : sets)
        reach |= s;
    if ((reach & universe) != universe)
        throw PreconditionError("candidate sets do not cover the universe");
    CoverSearch s{universe, sets, limits, 0, false, 0, {}, {}, 0};
    for (auto m : sets)
        s.max_set = std::max(s.max_set, static_cast<std::size_t>(std::popcount(m & universe)));
    // Greedy cover seeds the upper bound.
    VertexMask covered = 0;
    while ((covered & universe) != universe) {
        std::size_t pick = 0;
        int gain = -1;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            int g = std::popcount(sets[i] & universe & ~covered);
            if (g > gain) {
                gain = g;
                pick = i;
            }
        }
        s.best.push_back(pick);
        covered |= sets[pick];
    }
    s.best_size = s.best.size();
    s.expand(0);
    out.size = s.best_size;
    out.chosen = s.best;
    out.certified = !s.aborted;
    return out;
}

} // namespace latgrade
