#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "latgrade/lp.hpp"
#include "latgrade/vector_configuration.hpp"

namespace latgrade {

/// Sorted 0-based indices.
using IndexSet = std::vector<std::size_t>;

/// Caps for the exponential searches. Zero / empty means unlimited.
struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::size_t max_lp_calls = 0;
    std::size_t max_nodes = 0;

    static SearchLimits with_seconds(double seconds);
    bool expired() const;
};

/// pos_Q of finitely many vectors, kept as primitive nonzero integer generators.
class RationalCone {
public:
    explicit RationalCone(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}
    /// Zero vectors are dropped; the rest are made primitive. Order is kept.
    RationalCone(std::size_t ambient_dim, const std::vector<IntVector>& vectors);
    static RationalCone from_rational(std::size_t ambient_dim, const std::vector<RatVector>& vectors);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<IntVector>& generators() const { return gens_; }
    bool is_zero_cone() const { return gens_.empty(); }

private:
    std::size_t dim_;
    std::vector<IntVector> gens_;
};

struct ConvexityResult {
    bool strongly_convex = false;
    RatVector covector;     ///< c with c.g >= 1 for all generators, when convex
    IntVector line_vector;  ///< nonzero v in C and -C, otherwise
};

ConvexityResult is_strongly_convex(const RationalCone& c);

/// Generator indices spanning the extreme rays; among parallel generators the first is kept.
std::vector<std::size_t> extreme_rays(const RationalCone& c);

/// c with c.r_i = 0 for i in zero_set and c.r_j >= 1 otherwise.
struct FaceCertificate {
    RatVector covector;
    IndexSet zero_set;
};

/// Whether pos(r_i : i in e) is a face whose rays are exactly e. The empty set
/// gives {0}, the full set gives the cone itself (c = 0).
std::optional<FaceCertificate> is_face(const IndexSet& e, const std::vector<IntVector>& rays);

/// Extreme rays of a strongly convex configuration cone and its minimal non-faces.
struct NonfaceFamily {
    std::vector<std::size_t> ray_columns; ///< configuration column of each ray
    std::vector<IntVector> rays;
    std::vector<IndexSet> minimal_nonfaces; ///< indices into rays; by size, then lexicographic
    /// Pairs (kept, dropped) of index sets that generate the same cone.
    std::vector<std::pair<IndexSet, IndexSet>> duplicates;

    /// A non-face as configuration column indices.
    IndexSet columns_of(std::size_t nonface) const;
};

NonfaceFamily minimal_nonfaces(const std::vector<IntVector>& rays, const SearchLimits& limits = {});
/// Computes the extreme rays of pos(A) first; columns that are not rays are skipped.
NonfaceFamily minimal_nonfaces(const VectorConfiguration& a, const SearchLimits& limits = {});

bool cone_membership(const RatVector& v, const RationalCone& c);
bool cone_membership(const IntVector& v, const RationalCone& c);
/// v is a strictly positive combination of all generators ({0} for the zero cone).
bool relint_membership(const RatVector& v, const RationalCone& c);
bool relint_membership(const IntVector& v, const RationalCone& c);

/// A common point of all relative interiors, from one joint LP.
std::optional<RatVector> relint_intersection_nonempty(const std::vector<RationalCone>& cones);

/// The projection of cones sending a_i to b_i, defined when ker A is inside ker B.
class Projection {
public:
    const VectorConfiguration& source() const { return source_; }
    const VectorConfiguration& target() const { return target_; }

    /// Image of pos(a_i : i in columns).
    RationalCone image_cone(const IndexSet& columns) const;
    /// The linear map on the span of A; image of A.u is B.u.
    RatVector apply(const RatVector& v) const;
    RatVector apply(const IntVector& v) const;

    friend Projection project(const VectorConfiguration& a, const VectorConfiguration& b);

private:
    VectorConfiguration source_;
    VectorConfiguration target_;
    std::vector<RatVector> map_; ///< r x m rational matrix with map * A = B
};

Projection project(const VectorConfiguration& a, const VectorConfiguration& b);

RatVector to_rational(const IntVector& v);

} // namespace latgrade
