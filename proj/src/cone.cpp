#include "latgrade/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latgrade/errors.hpp"

namespace latgrade {

SearchLimits SearchLimits::with_seconds(double seconds)
{
    SearchLimits l;
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    return l;
}

bool SearchLimits::expired() const
{
    return deadline && std::chrono::steady_clock::now() > *deadline;
}

RatVector to_rational(const IntVector& v)
{
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(v[i]);
    return out;
}

RationalCone::RationalCone(std::size_t ambient_dim, const std::vector<IntVector>& vectors) : dim_(ambient_dim)
{
    for (const auto& v : vectors) {
        if (v.size() != dim_)
            throw DimensionError("cone generator has wrong length");
        if (!is_zero(v))
            gens_.push_back(primitive(v));
    }
}

RationalCone RationalCone::from_rational(std::size_t ambient_dim, const std::vector<RatVector>& vectors)
{
    std::vector<IntVector> ints;
    for (const auto& v : vectors)
        ints.push_back(clear_denominators(v));
    return RationalCone(ambient_dim, ints);
}

namespace {

void check_budget(const SearchLimits& limits, std::size_t lp_start)
{
    if (limits.expired())
        throw BudgetExceeded("time limit reached");
    if (limits.max_lp_calls && lp_call_count() - lp_start > limits.max_lp_calls)
        throw BudgetExceeded("LP call budget exhausted");
}

// Nonnegative combination sum lambda_i g_i == scale * v, with lambda_i >= lambda_floor
// and (when strict) the scale free in [1, inf).
bool combination_exists(const RatVector& v, const RationalCone& c, bool strict)
{
    if (v.size() != c.ambient_dim())
        throw DimensionError("point and cone dimensions differ");
    const auto& g = c.generators();
    const std::size_t n = g.size();
    const std::size_t vars = n + (strict ? 1 : 0);
    LinearSystem sys(vars);
    for (std::size_t d = 0; d < c.ambient_dim(); ++d) {
        RatVector row(vars, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            row[i] = g[i][d];
        Rational rhs = 0;
        if (strict)
            row[n] = -v[d];
        else
            rhs = v[d];
        sys.add_equality(std::move(row), rhs);
    }
    for (std::size_t i = 0; i < n; ++i)
        sys.add_lower_bound(i, strict ? Rational(1) : Rational(0));
    if (strict)
        sys.add_lower_bound(n, Rational(1));
    return lp_feasible(sys).has_value();
}

// Rational solution of M x = rhs, if any.
std::optional<RatVector> solve_rational(std::vector<RatVector> m, RatVector rhs, std::size_t unknowns)
{
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational piv = m[r][c];
        for (auto& x : m[r])
            x /= piv;
        rhs[r] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < unknowns; ++j)
                m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0)
            return std::nullopt;
    RatVector x(unknowns, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = rhs[i];
    return x;
}

} // namespace

ConvexityResult is_strongly_convex(const RationalCone& c)
{
    ConvexityResult out;
    const auto& g = c.generators();
    LinearSystem sys(c.ambient_dim());
    for (const auto& gen : g)
        sys.add_inequality(to_rational(gen), Rational(1));
    if (auto cov = lp_feasible(sys)) {
        out.strongly_convex = true;
        out.covector = std::move(*cov);
        return out;
    }
    // Farkas alternative: sum lambda_i g_i = 0 with lambda >= 0 and sum lambda >= 1.
    LinearSystem dual(g.size());
    for (std::size_t d = 0; d < c.ambient_dim(); ++d) {
        RatVector row(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            row[i] = g[i][d];
        dual.add_equality(std::move(row), Rational(0));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        dual.add_lower_bound(i, Rational(0));
    dual.add_inequality(RatVector(g.size(), Rational(1)), Rational(1));
    auto lambda = lp_feasible(dual);
    if (!lambda)
        throw std::logic_error("neither a positive covector nor a lineality certificate exists");
    for (std::size_t i = 0; i < g.size(); ++i)
        if ((*lambda)[i] > 0) {
            out.line_vector = g[i];
            break;
        }
    return out;
}

std::vector<std::size_t> extreme_rays(const RationalCone& c)
{
    if (!is_strongly_convex(c).strongly_convex)
        throw PreconditionError("extreme rays requested for a cone that is not strongly convex");
    const auto& g = c.generators();
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool seen = false;
        for (auto r : reps)
            if (g[r] == g[i]) {
                seen = true;
                break;
            }
        if (!seen)
            reps.push_back(i);
    }
    std::vector<std::size_t> out;
    for (auto i : reps) {
        std::vector<IntVector> others;
        for (auto j : reps)
            if (j != i)
                others.push_back(g[j]);
        if (!cone_membership(g[i], RationalCone(c.ambient_dim(), others)))
            out.push_back(i);
    }
    return out;
}

std::optional<FaceCertificate> is_face(const IndexSet& e, const std::vector<IntVector>& rays)
{
    for (auto i : e)
        if (i >= rays.size())
            throw DimensionError("face index out of range");
    if (rays.empty())
        return FaceCertificate{{}, e};
    const std::size_t m = rays.front().size();
    std::vector<bool> in_e(rays.size(), false);
    for (auto i : e)
        in_e[i] = true;
    LinearSystem sys(m);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (in_e[i])
            sys.add_equality(to_rational(rays[i]), Rational(0));
        else
            sys.add_inequality(to_rational(rays[i]), Rational(1));
    }
    auto c = lp_feasible(sys);
    if (!c)
        return std::nullopt;
    IndexSet zero(e.begin(), e.end());
    std::sort(zero.begin(), zero.end());
    return FaceCertificate{std::move(*c), std::move(zero)};
}

IndexSet NonfaceFamily::columns_of(std::size_t nonface) const
{
    IndexSet out;
    for (auto r : minimal_nonfaces.at(nonface))
        out.push_back(ray_columns.at(r));
    std::sort(out.begin(), out.end());
    return out;
}

NonfaceFamily minimal_nonfaces(const std::vector<IntVector>& rays, const SearchLimits& limits)
{
    NonfaceFamily fam;
    fam.rays = rays;
    for (std::size_t i = 0; i < rays.size(); ++i)
        fam.ray_columns.push_back(i);
    if (rays.empty())
        return fam;
    const std::size_t m = rays.front().size();
    RationalCone cone(m, rays);
    if (cone.generators().size() != rays.size())
        throw PreconditionError("extreme vectors must be nonzero");
    if (!is_strongly_convex(cone).strongly_convex)
        throw PreconditionError("minimal non-faces need a strongly convex cone");

    const std::size_t lp_start = lp_call_count();
    std::vector<IndexSet> nonfaces;
    std::vector<IndexSet> level;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        check_budget(limits, lp_start);
        if (is_face({i}, rays))
            level.push_back({i});
        else
            nonfaces.push_back({i});
    }
    while (!level.empty()) {
        std::set<IndexSet> known(level.begin(), level.end());
        std::vector<IndexSet> next;
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const auto& x = level[a];
                const auto& y = level[b];
                if (!std::equal(x.begin(), x.end() - 1, y.begin()))
                    break; // level is sorted, so the shared-prefix block has ended
                IndexSet cand = x;
                cand.push_back(y.back());
                bool all_faces = true;
                for (std::size_t skip = 0; skip + 2 < cand.size() && all_faces; ++skip) {
                    IndexSet sub;
                    for (std::size_t k = 0; k < cand.size(); ++k)
                        if (k != skip)
                            sub.push_back(cand[k]);
                    all_faces = known.count(sub) > 0;
                }
                if (!all_faces)
                    continue;
                check_budget(limits, lp_start);
                if (is_face(cand, rays))
                    next.push_back(std::move(cand));
                else
                    nonfaces.push_back(std::move(cand));
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }

    // Reduce to minimal elements under inclusion of the generated cones.
    auto contained = [&](const IndexSet& small, const IndexSet& big) {
        std::vector<IntVector> gens;
        for (auto i : big)
            gens.push_back(rays[i]);
        RationalCone c(m, gens);
        for (auto i : small)
            if (!std::binary_search(big.begin(), big.end(), i) && !cone_membership(rays[i], c))
                return false;
        return true;
    };
    std::sort(nonfaces.begin(), nonfaces.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    std::vector<bool> dropped(nonfaces.size(), false);
    for (std::size_t i = 0; i < nonfaces.size(); ++i) {
        if (dropped[i])
            continue;
        for (std::size_t j = 0; j < nonfaces.size(); ++j) {
            if (i == j || dropped[j])
                continue;
            check_budget(limits, lp_start);
            if (!contained(nonfaces[i], nonfaces[j]))
                continue;
            if (contained(nonfaces[j], nonfaces[i])) {
                // Same cone: keep the lexicographically smaller set.
                std::size_t keep = nonfaces[i] < nonfaces[j] ? i : j;
                std::size_t drop = keep == i ? j : i;
                dropped[drop] = true;
                fam.duplicates.emplace_back(nonfaces[keep], nonfaces[drop]);
                if (drop == i)
                    break;
            } else {
                dropped[j] = true;
            }
        }
    }
    for (std::size_t i = 0; i < nonfaces.size(); ++i)
        if (!dropped[i])
            fam.minimal_nonfaces.push_back(nonfaces[i]);
    std::sort(fam.minimal_nonfaces.begin(), fam.minimal_nonfaces.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return fam;
}

NonfaceFamily minimal_nonfaces(const VectorConfiguration& a, const SearchLimits& limits)
{
    std::vector<std::size_t> nonzero;
    std::vector<IntVector> vecs;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a.column(i))) {
            nonzero.push_back(i);
            vecs.push_back(a.column(i));
        }
    RationalCone cone(a.ambient_dim(), vecs);
    std::vector<std::size_t> ext = extreme_rays(cone);
    std::vector<IntVector> rays;
    std::vector<std::size_t> cols;
    for (auto k : ext) {
        cols.push_back(nonzero[k]);
        rays.push_back(cone.generators()[k]);
    }
    NonfaceFamily fam = minimal_nonfaces(rays, limits);
    fam.ray_columns = std::move(cols);
    return fam;
}

bool cone_membership(const RatVector& v, const RationalCone& c)
{
    return combination_exists(v, c, false);
}

bool cone_membership(const IntVector& v, const RationalCone& c)
{
    return cone_membership(to_rational(v), c);
}

bool relint_membership(const RatVector& v, const RationalCone& c)
{
    return combination_exists(v, c, true);
}

bool relint_membership(const IntVector& v, const RationalCone& c)
{
    return relint_membership(to_rational(v), c);
}

std::optional<RatVector> relint_intersection_nonempty(const std::vector<RationalCone>& cones)
{
    if (cones.empty())
        return RatVector{};
    const std::size_t dim = cones.front().ambient_dim();
    std::vector<std::size_t> offset;
    std::size_t vars = 0;
    for (const auto& c : cones) {
        if (c.ambient_dim() != dim)
            throw DimensionError("cones live in different dimensions");
        offset.push_back(vars);
        vars += c.generators().size();
    }
    // The common point is written through the first cone's coefficients.
    LinearSystem sys(vars);
    for (std::size_t k = 1; k < cones.size(); ++k)
        for (std::size_t d = 0; d < dim; ++d) {
            RatVector row(vars, Rational(0));
            bool any = false;
            for (std::size_t i = 0; i < cones[0].generators().size(); ++i)
                if (cones[0].generators()[i][d] != 0) {
                    row[offset[0] + i] += cones[0].generators()[i][d];
                    any = true;
                }
            for (std::size_t i = 0; i < cones[k].generators().size(); ++i)
                if (cones[k].generators()[i][d] != 0) {
                    row[offset[k] + i] -= cones[k].generators()[i][d];
                    any = true;
                }
            if (any)
                sys.add_equality(std::move(row), Rational(0));
        }
    for (std::size_t j = 0; j < vars; ++j)
        sys.add_lower_bound(j, Rational(1));
    auto lambda = lp_feasible(sys);
    if (!lambda)
        return std::nullopt;
    RatVector x(dim, Rational(0));
    for (std::size_t i = 0; i < cones[0].generators().size(); ++i)
        for (std::size_t d = 0; d < dim; ++d)
            x[d] += (*lambda)[offset[0] + i] * cones[0].generators()[i][d];
    return x;
}

Projection project(const VectorConfiguration& a, const VectorConfiguration& b)
{
    if (a.size() != b.size())
        throw DimensionError("projection needs configurations with the same number of columns");
    if (!lattice_contains(kernel_basis(b.matrix()), kernel_basis(a.matrix())))
        throw PreconditionError("kernel of the source is not contained in the kernel of the target");
    Projection p;
    p.source_ = a;
    p.target_ = b;
    const std::size_t n = a.size();
    const std::size_t m = a.ambient_dim();
    // Row p of the map solves A^T p = (row of B)^T.
    std::vector<RatVector> at(n, RatVector(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 0; d < m; ++d)
            at[i][d] = a.column(i)[d];
    for (std::size_t r = 0; r < b.ambient_dim(); ++r) {
        RatVector rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = b.column(i)[r];
        auto sol = solve_rational(at, rhs, m);
        if (!sol)
            throw std::logic_error("kernel containment holds but the linear map does not exist");
        p.map_.push_back(std::move(*sol));
    }
    return p;
}

RationalCone Projection::image_cone(const IndexSet& columns) const
{
    std::vector<IntVector> gens;
    for (auto c : columns)
        gens.push_back(target_.column(c));
    return RationalCone(target_.ambient_dim(), gens);
}

RatVector Projection::apply(const RatVector& v) const
{
    if (v.size() != source_.ambient_dim())
        throw DimensionError("projection input has wrong length");
    RatVector out(map_.size(), Rational(0));
    for (std::size_t r = 0; r < map_.size(); ++r)
        for (std::size_t d = 0; d < v.size(); ++d)
            out[r] += map_[r][d] * v[d];
    return out;
}

RatVector Projection::apply(const IntVector& v) const
{
    return apply(to_rational(v));
}

} // namespace latgrade
