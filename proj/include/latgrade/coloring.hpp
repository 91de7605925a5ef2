#pragma once

#include <cstdint>
#include <vector>

#include "latgrade/cone.hpp"
#include "latgrade/configuration.hpp"

namespace latgrade {

struct ColoringResult {
    std::size_t chromatic_number = 0;
    std::vector<std::size_t> coloring; ///< color in [0, k) for vertex i+1
    std::size_t clique_bound = 0;
    bool certified = true; ///< false when the limits stopped the search early
};

/// Exact chromatic number by DSATUR branch and bound with a clique lower bound.
ColoringResult chromatic_number(const Graph& g, const SearchLimits& limits = {});

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& coloring);

using VertexMask = std::uint64_t;

struct CoverResult {
    std::size_t size = 0;
    std::vector<std::size_t> chosen; ///< indices into the candidate sets
    bool certified = true;
};

/// Minimum number of candidate sets whose union is `universe` (exact branch and bound).
CoverResult minimum_set_cover(VertexMask universe, const std::vector<VertexMask>& sets,
                              const SearchLimits& limits = {});

} // namespace latgrade
