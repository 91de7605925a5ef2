#pragma once

#include <optional>
#include <string>

#include "latgrade/coloring.hpp"
#include "latgrade/cone.hpp"
#include "latgrade/configuration.hpp"
#include "latgrade/grading.hpp"

namespace latgrade {

using VertexSet = IndexSet;

/// Simplicial complex over a fixed vertex universe, stored by its facets.
/// A set is a face iff it lies in some facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// `labels[i]` names vertex i (the non-face E_i as column indices).
    /// Non-maximal entries of `faces` are dropped.
    SimplicialComplex(std::vector<IndexSet> labels, std::vector<VertexSet> faces);

    const std::vector<IndexSet>& labels() const { return labels_; }
    std::size_t universe_size() const { return labels_.size(); }
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet vertices() const;
    bool is_face(const VertexSet& s) const;
    /// -1 for the empty complex.
    int dimension() const;
    SimplicialComplex induced(const VertexSet& keep) const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    std::vector<IndexSet> labels_;
    std::vector<VertexSet> facets_;
};

/// D_F^G: vertices are the minimal non-faces of sigma_G; T is a face iff the relative
/// interiors of the projected cones pi(sigma_G(E_i)), E_i in T, share a point.
SimplicialComplex build_complex(const Projection& proj, const NonfaceFamily& nonfaces,
                                const SearchLimits& limits = {});

/// Subcomplex induced on the E_i that are cone(N) of some monomial N of p.
SimplicialComplex polynomial_subcomplex(const Polynomial& p, const SimplicialComplex& complex,
                                        const VectorConfiguration& a, const NonfaceFamily& nonfaces);

bool is_spanning(const SimplicialComplex& sub, const SimplicialComplex& complex);
/// The whole vertex set is a face; the empty complex counts as a simplex.
bool is_simplex(const SimplicialComplex& c);

/// Complement of the {0,1}-skeleton. Graph vertex k+1 is complex.vertices()[k].
Graph skeleton_complement(const SimplicialComplex& c);

struct DeltaResult {
    std::size_t delta = 0;
    /// Pairwise disjoint faces covering every vertex.
    std::vector<VertexSet> matching;
    /// Omega = {0, ..., dim}.
    std::vector<std::size_t> omega;
    bool certified = true;
};

/// Smallest number of faces whose union is spanning, with a disjoint witness.
DeltaResult delta_omega(const SimplicialComplex& c, const SearchLimits& limits = {});

struct PolynomialVerdict {
    bool homogeneous = false;
    std::size_t components = 0;
    std::size_t monomials = 0;
    VertexSet vertices;
    bool simplex = false;
};

/// Necessary conditions for generating rad(I_L) up to radical. Can refute, never certify.
struct CoverReport {
    std::vector<PolynomialVerdict> polynomials;
    VertexSet covered;
    VertexSet uncovered;
    bool spanning = false;
    bool homogeneous_are_simplices = true;
    bool passes() const { return spanning && homogeneous_are_simplices; }
};

CoverReport verify_cover_conditions(const std::vector<Polynomial>& polys, const Grading& f,
                                    const SimplicialComplex& complex, const VectorConfiguration& a,
                                    const NonfaceFamily& nonfaces);

struct NamedGenerators {
    std::string name;
    std::vector<Polynomial> polynomials;
};

struct GeneratorSummary {
    std::string name;
    std::size_t size = 0;
    bool all_homogeneous = false;            ///< under F
    bool all_saturation_homogeneous = false; ///< under Z^n / Sat(L_F)
    std::size_t total_monomials = 0;
    std::size_t total_components = 0;        ///< F-homogeneous components
    bool meets_monomial_floor = false;
    bool meets_component_floor = false;
    CoverReport cover;
    /// "ara_F", "ara_ZB" or "none": which rank this set bounds from above.
    std::string certifies;
};

struct BoundReport {
    NonfaceFamily nonfaces;
    SimplicialComplex complex_gg;
    SimplicialComplex complex_fg;
    ColoringResult coloring; ///< of the complement skeleton of D_F^G
    std::size_t gamma = 0;
    DeltaResult delta;
    std::size_t height = 0;
    std::size_t monomial_floor = 0;
    std::size_t component_floor = 0;
    std::vector<GeneratorSummary> generator_sets;
    std::size_t lower_bound = 0;
    std::optional<std::size_t> upper_bound;
    std::vector<std::string> conclusions;
    bool certified = true;
};

/// Lower bounds for ara_F(I_{L_G}) and their comparison with supplied generator sets.
BoundReport bound_report(const Grading& g, const Grading& f, const std::vector<NamedGenerators>& sets,
                         const SearchLimits& limits = {});

} // namespace latgrade
