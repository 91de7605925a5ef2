#include "latgrade/grading.hpp"

#include <map>

#include "latgrade/cone.hpp"
#include "latgrade/errors.hpp"
#include "latgrade/lp.hpp"

namespace latgrade {

Grading::Grading(Lattice relations)
    : relations_(std::move(relations)),
      group_(group_structure(relations_)),
      config_(configuration_from_lattice(relations_))
{
}

Grading::Grading(Lattice relations, VectorConfiguration config)
    : relations_(std::move(relations)), group_(group_structure(relations_)), config_(std::move(config))
{
}

Grading Grading::from_configuration(const VectorConfiguration& a)
{
    return Grading(kernel_basis(a.matrix()), a);
}

Grading Grading::finest(std::size_t n)
{
    return Grading(Lattice(n));
}

Grading Grading::coarsest(std::size_t n)
{
    return Grading(Lattice::full(n));
}

Polynomial::Polynomial(std::vector<Term> terms)
{
    std::map<IntVector, Rational> merged;
    std::vector<IntVector> order;
    std::size_t n = terms.empty() ? 0 : terms.front().exponent.size();
    for (auto& t : terms) {
        if (t.exponent.size() != n)
            throw DimensionError("polynomial terms have different numbers of variables");
        for (const auto& e : t.exponent)
            if (e < 0)
                throw PreconditionError("negative exponent");
        auto [it, inserted] = merged.emplace(t.exponent, t.coefficient);
        if (inserted)
            order.push_back(t.exponent);
        else
            it->second += t.coefficient;
    }
    for (auto& e : order) {
        const Rational& c = merged[e];
        if (c != 0)
            terms_.push_back({e, c});
    }
}

Polynomial Polynomial::binomial(const IntVector& plus, const IntVector& minus)
{
    return Polynomial({{plus, Rational(1)}, {minus, Rational(-1)}});
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return Polynomial(std::move(all));
}

namespace {

void same_rank(const Grading& f, const Grading& g)
{
    if (f.ambient_rank() != g.ambient_rank())
        throw DimensionError("gradings have different numbers of generators");
}

void reject_zero(const Polynomial& p)
{
    if (p.is_zero())
        throw PreconditionError("the zero polynomial is not accepted");
}

Lattice exponent_differences(const std::vector<Polynomial>& polys, std::size_t n)
{
    IntMatrix gens(0, n);
    for (const auto& p : polys) {
        reject_zero(p);
        if (p.variables() != n)
            throw DimensionError("polynomial has the wrong number of variables");
        const IntVector& first = p.terms().front().exponent;
        for (std::size_t j = 1; j < p.terms().size(); ++j) {
            IntVector d(n);
            for (std::size_t i = 0; i < n; ++i)
                d[i] = p.terms()[j].exponent[i] - first[i];
            gens.append_row(d);
        }
    }
    return Lattice::from_generators(gens);
}

} // namespace

bool is_specialization(const Grading& f, const Grading& g)
{
    same_rank(f, g);
    return lattice_contains(f.relations(), g.relations());
}

bool is_equivalent(const Grading& f, const Grading& g)
{
    same_rank(f, g);
    return f.relations() == g.relations();
}

Grading meet(const Grading& f, const Grading& g)
{
    same_rank(f, g);
    return Grading(lattice_sum(f.relations(), g.relations()));
}

Grading join(const Grading& f, const Grading& g)
{
    same_rank(f, g);
    return Grading(lattice_intersection(f.relations(), g.relations()));
}

Grading finest_grading(const std::vector<Polynomial>& polys, std::size_t n)
{
    return Grading(exponent_differences(polys, n));
}

Grading finest_grading_below(const std::vector<Polynomial>& polys, const Grading& g)
{
    return meet(finest_grading(polys, g.ambient_rank()), g);
}

DegreeClass degree(const IntVector& u, const Grading& f)
{
    if (u.size() != f.ambient_rank())
        throw DimensionError("exponent vector has the wrong length");
    return DegreeClass{f.relations().reduce(u)};
}

std::vector<Polynomial> homogeneous_components(const Polynomial& p, const Grading& f)
{
    reject_zero(p);
    std::vector<DegreeClass> keys;
    std::vector<std::vector<Term>> parts;
    for (const auto& t : p.terms()) {
        DegreeClass d = degree(t.exponent, f);
        std::size_t k = 0;
        while (k < keys.size() && !(keys[k] == d))
            ++k;
        if (k == keys.size()) {
            keys.push_back(d);
            parts.emplace_back();
        }
        parts[k].push_back(t);
    }
    std::vector<Polynomial> out;
    for (auto& part : parts)
        out.emplace_back(std::move(part));
    return out;
}

bool is_homogeneous(const Polynomial& p, const Grading& f)
{
    return homogeneous_components(p, f).size() == 1;
}

PositivityWitness is_positive(const Grading& g)
{
    const VectorConfiguration& a = g.configuration();
    LinearSystem sys(a.ambient_dim());
    for (const auto& col : a.columns())
        sys.add_inequality(to_rational(col), Rational(1));
    PositivityWitness w;
    if (auto c = lp_feasible(sys)) {
        w.covector = std::move(*c);
        return w;
    }
    // lambda >= 0, sum lambda >= 1, A lambda = 0 gives a vector of Sat(L) in N^n.
    const std::size_t n = a.size();
    LinearSystem dual(n);
    for (std::size_t d = 0; d < a.ambient_dim(); ++d) {
        RatVector row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = a.column(i)[d];
        dual.add_equality(std::move(row), Rational(0));
    }
    for (std::size_t i = 0; i < n; ++i)
        dual.add_lower_bound(i, Rational(0));
    dual.add_inequality(RatVector(n, Rational(1)), Rational(1));
    auto lambda = lp_feasible(dual);
    if (!lambda)
        throw std::logic_error("positivity LP and its Farkas alternative both infeasible");
    IntVector u = primitive(clear_denominators(*lambda));
    // u lies in Sat(L); the smallest multiple inside L is a divisor of the exponent.
    Integer exponent = 1;
    for (const auto& t : g.group().torsion)
        exponent = t; // torsion is a divisibility chain; the last factor annihilates it
    for (Integer d = 1; d <= exponent; ++d) {
        if (exponent % d != 0)
            continue;
        IntVector du(n);
        for (std::size_t i = 0; i < n; ++i)
            du[i] = d * u[i];
        if (g.relations().contains(du)) {
            w.violating = std::move(du);
            break;
        }
    }
    if (!w.violating)
        throw std::logic_error("no multiple of the saturation vector lies in the lattice");
    return w;
}

std::vector<Integer> positive_integer_specialization(const Grading& g)
{
    PositivityWitness w = is_positive(g);
    if (!w.positive())
        throw PreconditionError("grading is not positive");
    IntVector c = clear_denominators(*w.covector);
    std::vector<Integer> m;
    for (const auto& col : g.configuration().columns()) {
        Integer s = 0;
        for (std::size_t d = 0; d < col.size(); ++d)
            s += c[d] * col[d];
        m.push_back(s);
    }
    return m;
}

} // namespace latgrade
