// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "latgrade/complex.hpp"
#include "latgrade/cube_example.hpp"
#include "latgrade/io.hpp"
#include "properties.hpp"

using namespace latgrade;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (pass)
                detail = what;
            pass = false;
        }
    }
};

using LabelSet = std::set<std::string>;

struct CubeFixture {
    VectorConfiguration a = cube::configuration();
    VectorConfiguration b = cube::specialization();
    NonfaceFamily nf = minimal_nonfaces(a);

    LabelSet labels_of_nonface(std::size_t v) const
    {
        LabelSet s;
        for (auto c : nf.columns_of(v))
            s.insert(a.label(c));
        return s;
    }
    // The listed E_k, 1-based, as a set of edge labels.
    static LabelSet listed(std::size_t k)
    {
        const auto& l = cube::nonface_labels()[k - 1];
        return {l.begin(), l.end()};
    }
    std::set<LabelSet> as_labels(const VertexSet& vs) const
    {
        std::set<LabelSet> out;
        for (auto v : vs)
            out.insert(labels_of_nonface(v));
        return out;
    }
    static std::set<LabelSet> listed_set(std::initializer_list<std::size_t> ks)
    {
        std::set<LabelSet> out;
        for (auto k : ks)
            out.insert(listed(k));
        return out;
    }
    std::set<std::set<LabelSet>> facet_labels(const std::vector<VertexSet>& facets) const
    {
        std::set<std::set<LabelSet>> out;
        for (const auto& f : facets)
            out.insert(as_labels(f));
        return out;
    }
};

const CubeFixture& fixture()
{
    static const CubeFixture f;
    return f;
}

std::set<std::set<LabelSet>> listed_fg_facets()
{
    std::set<std::set<LabelSet>> out{CubeFixture::listed_set({13, 14, 15, 16, 17, 18, 19, 20})};
    for (std::size_t i = 1; i <= 11; i += 2)
        out.insert(CubeFixture::listed_set({i, i + 1}));
    return out;
}

Verdict circuits_of_cube()
{
    Verdict v;
    const VectorConfiguration a = cube::configuration();
    const auto cs = circuits(graph_configuration(cube::graph()));
    v.require(cs.size() == 28, "expected 28 circuits, got " + std::to_string(cs.size()));
    std::map<std::size_t, std::size_t> hist;
    std::set<IntVector> computed;
    for (const auto& c : cs) {
        std::size_t support = 0;
        for (const auto& x : c.vector)
            support += x != 0;
        ++hist[support];
        computed.insert(c.vector);
    }
    v.require(hist == std::map<std::size_t, std::size_t>{{4, 6}, {6, 16}, {8, 6}}, "support histogram differs");
    std::set<IntVector> listed;
    for (const auto& e : cube::circuit_expressions()) {
        Polynomial p = parse_polynomial_expression(e, a);
        IntVector d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            d[i] = p.terms()[0].exponent[i] - p.terms()[1].exponent[i];
        auto first = std::find_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; });
        if (*first < 0)
            for (auto& x : d)
                x = -x;
        listed.insert(d);
    }
    v.require(computed == listed, "circuits differ from the listed binomials");
    return v;
}

Verdict cube_nonfaces()
{
    Verdict v;
    const CubeFixture& k = fixture();
    v.require(k.nf.minimal_nonfaces.size() == 20, "expected 20 minimal non-faces");
    std::set<LabelSet> computed, listed, supports;
    for (std::size_t i = 0; i < k.nf.minimal_nonfaces.size(); ++i)
        computed.insert(k.labels_of_nonface(i));
    for (std::size_t i = 1; i <= 20; ++i)
        listed.insert(CubeFixture::listed(i));
    v.require(computed == listed, "non-faces differ from E_1..E_20");
    // cross-check: the monomial supports of the ten generators give the same family
    for (const auto& p : cube::minimal_generators())
        for (const auto& t : p.terms()) {
            LabelSet s;
            for (std::size_t i = 0; i < t.exponent.size(); ++i)
                if (t.exponent[i] != 0)
                    s.insert(k.a.label(i));
            supports.insert(s);
        }
    v.require(supports == computed, "non-faces differ from the generator monomial supports");
    return v;
}

Verdict dgg_structure()
{
    Verdict v;
    const CubeFixture& k = fixture();
    SimplicialComplex dgg = build_complex(project(k.a, k.a), k.nf);
    std::set<std::set<LabelSet>> listed;
    for (std::size_t i = 1; i <= 19; i += 2)
        listed.insert(CubeFixture::listed_set({i, i + 1}));
    v.require(k.facet_labels(dgg.facets()) == listed, "facets differ from the ten listed edges");
    v.require(dgg.dimension() == 1, "complex has 2-simplices");
    return v;
}

Verdict g_homogeneous_bracket()
{
    Verdict v;
    Grading g = Grading::from_configuration(cube::configuration());
    BoundReport r = bound_report(g, g, {{"circuits", cube::minimal_generators()}});
    v.require(r.gamma == 10, "gamma = " + std::to_string(r.gamma));
    v.require(r.generator_sets.at(0).certifies == "ara_F", "ten circuits do not certify an upper bound");
    v.require(r.lower_bound == 10 && r.upper_bound && *r.upper_bound == 10, "bracket does not close at 10");
    return v;
}

Verdict specialization_ranks()
{
    Verdict v;
    Grading g = Grading::from_configuration(cube::configuration());
    Grading f = Grading::from_configuration(cube::specialization());
    v.require(is_specialization(f, g), "L_G not inside L_F");
    v.require(f.relations().rank() == 8, "rank L_F = " + std::to_string(f.relations().rank()));
    v.require(g.relations().rank() == 5, "rank L_G = " + std::to_string(g.relations().rank()));
    v.require(height(g.relations()) == 5, "height differs");
    return v;
}

Verdict dfg_structure()
{
    Verdict v;
    const CubeFixture& k = fixture();
    SimplicialComplex dfg = build_complex(project(k.a, k.b), k.nf);
    v.require(dfg.facets().size() == 7, "facet count " + std::to_string(dfg.facets().size()));
    v.require(k.facet_labels(dfg.facets()) == listed_fg_facets(), "facets differ from the listed ones");
    return v;
}

Verdict delta_gamma_report()
{
    Verdict v;
    const CubeFixture& k = fixture();
    Grading g = Grading::from_configuration(k.a);
    Grading f = Grading::from_configuration(k.b);
    BoundReport r = bound_report(g, f, {{"radical", cube::radical_generators()}});
    v.require(r.delta.delta == 7, "delta = " + std::to_string(r.delta.delta));
    v.require(k.facet_labels(r.delta.matching) == listed_fg_facets(), "witness differs from the listed matching");
    v.require(r.gamma == 7, "gamma = " + std::to_string(r.gamma));
    v.require(r.height == 5 && r.lower_bound == 7 && r.upper_bound && *r.upper_bound == 7, "chain is not 5 <= 7 <= 7");
    v.require(std::find(r.conclusions.begin(), r.conclusions.end(),
                        "not an F-homogeneous set-theoretic complete intersection") != r.conclusions.end(),
              "complete-intersection flag missing");
    return v;
}

Verdict floors()
{
    Verdict v;
    Grading g = Grading::from_configuration(cube::configuration());
    Grading f = Grading::from_configuration(cube::specialization());
    BoundReport r = bound_report(g, f, {{"radical", cube::radical_generators()}});
    const GeneratorSummary& s = r.generator_sets.at(0);
    v.require(s.total_monomials == 20 && r.monomial_floor == 20, "monomial count/floor not 20/20");
    v.require(s.total_components == 7 && r.component_floor == 7, "component count/floor not 7/7");
    v.require(s.meets_monomial_floor && s.meets_component_floor, "floors not met");
    return v;
}

Verdict property_suites()
{
    Verdict v;
    props::GammaDelta gd;
    std::vector<props::Outcome> runs{
        props::snf_hnf(1001, 1000),
        props::saturation(1002, 500),
        props::specialization_vs_group_maps(1003, 200),
        props::grading_algebra(1004, 200),
        props::complex_chain(1005, 100, gd),
        props::lp_vs_fourier_motzkin(1006, 500),
        props::delta_vs_partition(1007, 100, gd),
        gd.outcome,
    };
    std::ostringstream out;
    for (const auto& o : runs) {
        std::cout << "    " << o.summary() << "\n";
        if (!o.ok())
            v.require(false, o.summary());
    }
    return v;
}

Verdict negative_control()
{
    Verdict v;
    const CubeFixture& k = fixture();
    Grading g = Grading::from_configuration(k.a);
    SimplicialComplex dgg = build_complex(project(k.a, k.a), k.nf);
    CoverReport c = verify_cover_conditions(cube::quadric_circuits(), g, dgg, k.a, k.nf);
    v.require(!c.passes(), "quadrics pass the cover conditions");
    v.require(k.as_labels(c.uncovered) == CubeFixture::listed_set({13, 14, 15, 16, 17, 18, 19, 20}),
              "uncovered vertices differ from E_13..E_20");
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"cube circuits: 28, histogram {4:6,6:16,8:6}, equal to the listed binomials", circuits_of_cube},
        {"cube minimal non-faces: the 20 listed sets", cube_nonfaces},
        {"D_G^G: ten listed edges, no 2-simplices", dgg_structure},
        {"gamma(D_G^G) = 10 and ara_G = 10 with the ten circuits", g_homogeneous_bracket},
        {"F specializes G, rank L_F = 8, rank L_G = ht = 5", specialization_ranks},
        {"D_F^G: the 7-simplex and six edges", dfg_structure},
        {"delta = gamma = 7 with the listed matching; 5 <= 7 <= 7, not a complete intersection", delta_gamma_report},
        {"radical generators meet the floors: 20 monomials, 7 components", floors},
        {"randomized property suites", property_suites},
        {"six quadrics leave exactly E_13..E_20 uncovered", negative_control},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ": " << criteria[i].first;
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << " (" << t.str() << " s)";
        if (!v.pass)
            std::cout << " -- " << v.detail;
        std::cout << std::endl;
        failures += !v.pass;
    }
    return failures;
}
