#include "latgrade/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "latgrade/errors.hpp"

namespace latgrade {

namespace {

bool subset_of(const VertexSet& a, const VertexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexMask to_mask(const VertexSet& s)
{
    VertexMask m = 0;
    for (auto v : s)
        m |= VertexMask{1} << v;
    return m;
}

VertexSet from_mask(VertexMask m)
{
    VertexSet s;
    for (; m; m &= m - 1)
        s.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return s;
}

std::vector<VertexSet> maximal_only(std::vector<VertexSet> faces)
{
    for (auto& f : faces)
        std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    std::vector<VertexSet> out;
    for (auto& f : faces) {
        bool covered = false;
        for (const auto& g : out)
            if (subset_of(f, g)) {
                covered = true;
                break;
            }
        if (!covered)
            out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<IndexSet> labels, std::vector<VertexSet> faces)
    : labels_(std::move(labels))
{
    for (const auto& f : faces)
        for (auto v : f)
            if (v >= labels_.size())
                throw DimensionError("face vertex outside the vertex universe");
    std::erase_if(faces, [](const VertexSet& f) { return f.empty(); });
    facets_ = maximal_only(std::move(faces));
}

VertexSet SimplicialComplex::vertices() const
{
    std::set<std::size_t> vs;
    for (const auto& f : facets_)
        vs.insert(f.begin(), f.end());
    return VertexSet(vs.begin(), vs.end());
}

bool SimplicialComplex::is_face(const VertexSet& s) const
{
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty())
        return true;
    for (const auto& f : facets_)
        if (subset_of(sorted, f))
            return true;
    return false;
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (const auto& f : facets_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex SimplicialComplex::induced(const VertexSet& keep) const
{
    VertexSet k = keep;
    std::sort(k.begin(), k.end());
    std::vector<VertexSet> faces;
    for (const auto& f : facets_) {
        VertexSet inter;
        std::set_intersection(f.begin(), f.end(), k.begin(), k.end(), std::back_inserter(inter));
        faces.push_back(std::move(inter));
    }
    return SimplicialComplex(labels_, std::move(faces));
}

SimplicialComplex build_complex(const Projection& proj, const NonfaceFamily& nonfaces, const SearchLimits& limits)
{
    const std::size_t f = nonfaces.minimal_nonfaces.size();
    std::vector<IndexSet> labels;
    std::vector<RationalCone> cones;
    for (std::size_t i = 0; i < f; ++i) {
        labels.push_back(nonfaces.columns_of(i));
        for (auto c : labels.back())
            if (c >= proj.source().size())
                throw DimensionError("non-face refers to a column outside the projection");
        cones.push_back(proj.image_cone(labels.back()));
    }
    if (f == 0)
        return SimplicialComplex(labels, {});
    if (f > 64)
        throw BudgetExceeded("complexes with more than 64 vertices are not supported");

    const std::size_t lp_start = lp_call_count();
    auto is_face_mask = [&](VertexMask m) {
        if (limits.expired())
            throw BudgetExceeded("time limit reached while building the complex");
        if (limits.max_lp_calls && lp_call_count() - lp_start > limits.max_lp_calls)
            throw BudgetExceeded("LP call budget exhausted while building the complex");
        std::vector<RationalCone> group;
        for (auto v : from_mask(m))
            group.push_back(cones[v]);
        return relint_intersection_nonempty(group).has_value();
    };

    const VertexMask all = (f == 64) ? ~VertexMask{0} : ((VertexMask{1} << f) - 1);
    if (is_face_mask(all))
        return SimplicialComplex(labels, {from_mask(all)});

    // Level-wise sweep: a set is tested only when all its codimension-one subsets are faces.
    std::vector<VertexSet> facets;
    std::vector<VertexSet> level;
    for (std::size_t v = 0; v < f; ++v)
        if (is_face_mask(VertexMask{1} << v))
            level.push_back({v});
        else
            throw std::logic_error("a single relative interior is never empty");
    while (!level.empty()) {
        std::set<VertexSet> known(level.begin(), level.end());
        std::vector<VertexSet> next;
        std::vector<bool> extended(level.size(), false);
        for (std::size_t a = 0; a < level.size(); ++a)
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const auto& x = level[a];
                const auto& y = level[b];
                if (!std::equal(x.begin(), x.end() - 1, y.begin()))
                    break;
                VertexSet cand = x;
                cand.push_back(y.back());
                bool ok = true;
                for (std::size_t skip = 0; skip + 2 < cand.size() && ok; ++skip) {
                    VertexSet sub;
                    for (std::size_t k = 0; k < cand.size(); ++k)
                        if (k != skip)
                            sub.push_back(cand[k]);
                    ok = known.count(sub) > 0;
                }
                if (!ok || !is_face_mask(to_mask(cand)))
                    continue;
                next.push_back(std::move(cand));
            }
        std::sort(next.begin(), next.end());
        for (std::size_t i = 0; i < level.size(); ++i)
            for (const auto& n : next)
                if (subset_of(level[i], n)) {
                    extended[i] = true;
                    break;
                }
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!extended[i])
                facets.push_back(level[i]);
        level = std::move(next);
    }
    return SimplicialComplex(labels, std::move(facets));
}

SimplicialComplex polynomial_subcomplex(const Polynomial& p, const SimplicialComplex& complex,
                                        const VectorConfiguration& a, const NonfaceFamily& nonfaces)
{
    if (p.is_zero())
        throw PreconditionError("the zero polynomial is not accepted");
    if (complex.universe_size() != nonfaces.minimal_nonfaces.size())
        throw DimensionError("complex and non-face family disagree on the vertex count");
    std::set<std::size_t> vs;
    for (const auto& t : p.terms())
        if (auto i = cone_of_monomial(t.exponent, a, nonfaces))
            vs.insert(*i);
    return complex.induced(VertexSet(vs.begin(), vs.end()));
}

bool is_spanning(const SimplicialComplex& sub, const SimplicialComplex& complex)
{
    if (sub.universe_size() != complex.universe_size())
        throw DimensionError("complexes have different vertex universes");
    for (const auto& f : sub.facets())
        if (!complex.is_face(f))
            throw PreconditionError("not a subcomplex");
    return sub.vertices() == complex.vertices();
}

bool is_simplex(const SimplicialComplex& c)
{
    return c.is_face(c.vertices());
}

Graph skeleton_complement(const SimplicialComplex& c)
{
    const VertexSet vs = c.vertices();
    Graph g(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!c.is_face({vs[i], vs[j]}))
                g.add_edge(i + 1, j + 1);
    return g;
}

DeltaResult delta_omega(const SimplicialComplex& c, const SearchLimits& limits)
{
    DeltaResult out;
    for (int d = 0; d <= c.dimension(); ++d)
        out.omega.push_back(static_cast<std::size_t>(d));
    const VertexSet vs = c.vertices();
    if (vs.empty())
        return out;
    if (c.universe_size() > 64)
        throw BudgetExceeded("complexes with more than 64 vertices are not supported");
    std::vector<VertexMask> sets;
    for (const auto& f : c.facets())
        sets.push_back(to_mask(f));
    CoverResult cover = minimum_set_cover(to_mask(vs), sets, limits);
    out.delta = cover.size;
    out.certified = cover.certified;
    // Subsets of faces are faces, so trimming overlaps keeps a valid matching.
    VertexMask used = 0;
    for (auto i : cover.chosen) {
        VertexMask part = sets[i] & ~used;
        used |= sets[i];
        out.matching.push_back(from_mask(part));
    }
    std::sort(out.matching.begin(), out.matching.end());
    return out;
}

CoverReport verify_cover_conditions(const std::vector<Polynomial>& polys, const Grading& f,
                                    const SimplicialComplex& complex, const VectorConfiguration& a,
                                    const NonfaceFamily& nonfaces)
{
    if (f.ambient_rank() != a.size())
        throw DimensionError("grading and configuration have different numbers of variables");
    CoverReport report;
    std::set<std::size_t> covered;
    for (const auto& p : polys) {
        PolynomialVerdict v;
        auto parts = homogeneous_components(p, f);
        v.components = parts.size();
        v.homogeneous = parts.size() == 1;
        v.monomials = p.terms().size();
        SimplicialComplex sub = polynomial_subcomplex(p, complex, a, nonfaces);
        v.vertices = sub.vertices();
        v.simplex = is_simplex(sub);
        if (v.homogeneous && !v.simplex)
            report.homogeneous_are_simplices = false;
        covered.insert(v.vertices.begin(), v.vertices.end());
        report.polynomials.push_back(std::move(v));
    }
    report.covered.assign(covered.begin(), covered.end());
    for (auto v : complex.vertices())
        if (!covered.count(v))
            report.uncovered.push_back(v);
    report.spanning = report.uncovered.empty();
    return report;
}

BoundReport bound_report(const Grading& g, const Grading& f, const std::vector<NamedGenerators>& sets,
                         const SearchLimits& limits)
{
    if (f.ambient_rank() != g.ambient_rank())
        throw DimensionError("gradings have different numbers of generators");
    if (!is_specialization(f, g))
        throw PreconditionError("F is not a specialization of G");
    if (!is_positive(g).positive())
        throw PreconditionError("the G-grading is not positive; sigma_G is not strongly convex");

    BoundReport r;
    const VectorConfiguration& a = g.configuration();
    const VectorConfiguration& b = f.configuration();
    r.nonfaces = minimal_nonfaces(a, limits);
    r.complex_gg = build_complex(project(a, a), r.nonfaces, limits);
    r.complex_fg = build_complex(project(a, b), r.nonfaces, limits);

    r.coloring = chromatic_number(skeleton_complement(r.complex_fg), limits);
    r.gamma = r.coloring.chromatic_number;
    r.delta = delta_omega(r.complex_fg, limits);
    r.height = height(g.relations());
    r.monomial_floor = r.complex_gg.vertices().size();
    r.component_floor = r.delta.delta;
    r.certified = r.coloring.certified && r.delta.certified;
    if (r.gamma > r.delta.delta)
        throw std::logic_error("chromatic number exceeds delta");

    const Grading saturation(saturate(f.relations()));
    for (const auto& set : sets) {
        GeneratorSummary s;
        s.name = set.name;
        s.size = set.polynomials.size();
        s.all_homogeneous = true;
        s.all_saturation_homogeneous = true;
        for (const auto& p : set.polynomials) {
            s.total_monomials += p.terms().size();
            s.total_components += homogeneous_components(p, f).size();
            s.all_homogeneous = s.all_homogeneous && is_homogeneous(p, f);
            s.all_saturation_homogeneous = s.all_saturation_homogeneous && is_homogeneous(p, saturation);
        }
        s.meets_monomial_floor = s.total_monomials >= r.monomial_floor;
        s.meets_component_floor = s.total_components >= r.component_floor;
        s.cover = verify_cover_conditions(set.polynomials, f, r.complex_fg, a, r.nonfaces);
        if (!s.cover.passes())
            s.certifies = "none";
        else if (s.all_homogeneous)
            s.certifies = "ara_F";
        else if (s.all_saturation_homogeneous)
            s.certifies = "ara_ZB";
        else
            s.certifies = "none";
        if (s.certifies == "ara_F" && (!r.upper_bound || s.size < *r.upper_bound))
            r.upper_bound = s.size;
        r.generator_sets.push_back(std::move(s));
    }

    r.lower_bound = std::max({r.gamma, r.delta.delta, r.height});
    const std::size_t combinatorial = std::max(r.gamma, r.delta.delta);
    if (r.height < combinatorial)
        r.conclusions.push_back("not an F-homogeneous set-theoretic complete intersection");
    if (r.upper_bound && *r.upper_bound == r.lower_bound)
        r.conclusions.push_back("F-homogeneous arithmetical rank pinned to " + std::to_string(r.lower_bound));
    for (const auto& s : r.generator_sets) {
        if (!s.cover.passes())
            r.conclusions.push_back("generator set '" + s.name +
                                    "' fails the cover conditions and cannot generate the radical");
        else if (!s.meets_monomial_floor || !s.meets_component_floor)
            r.conclusions.push_back("generator set '" + s.name + "' is below a monomial or component floor");
    }
    if (!r.certified)
        r.conclusions.push_back("bound not certified: search limits reached");
    return r;
}

} // namespace latgrade
