// latgrade: command-line front end for the grading / arithmetical-rank toolkit.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latgrade/complex.hpp"
#include "latgrade/cube_example.hpp"
#include "latgrade/errors.hpp"
#include "latgrade/io.hpp"

using namespace latgrade;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, input_error = 2, precondition = 3, budget = 4 };

json jint(const Integer& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json jvec(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(jint(x));
    return a;
}

json jrat(const RatVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.get_den() == 1 ? jint(x.get_num()) : json(x.get_str()));
    return a;
}

json jmatrix(const IntMatrix& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(jvec(m.row(i)));
    return a;
}

json jset1(const IndexSet& s)
{
    json a = json::array();
    for (auto i : s)
        a.push_back(i + 1);
    return a;
}

json jgroup(const GroupStructure& g)
{
    json t = json::array();
    for (const auto& d : g.torsion)
        t.push_back(jint(d));
    return {{"free_rank", g.free_rank}, {"torsion", t}};
}

json jgrading(const Grading& g)
{
    return {{"variables", g.ambient_rank()},
            {"relation_rank", g.relations().rank()},
            {"relations", jmatrix(g.relations().basis())},
            {"group", jgroup(g.group())}};
}

// Plain-text rendering of a report: one "key: value" per line, nested blocks indented.
void render_text(std::ostream& out, const json& j, int indent)
{
    const std::string pad(indent, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        out << pad << it.key() << ':';
        if (v.is_object()) {
            out << '\n';
            render_text(out, v, indent + 2);
        } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
            out << '\n';
            for (const auto& e : v) {
                if (e.is_object()) {
                    out << pad << "  -\n";
                    render_text(out, e, indent + 4);
                } else {
                    out << pad << "  " << e.dump() << '\n';
                }
            }
        } else if (v.is_string()) {
            out << ' ' << v.get<std::string>() << '\n';
        } else {
            out << ' ' << v.dump() << '\n';
        }
    }
}

struct Options {
    std::string format = "text";
    double time_limit = 0;
    std::size_t budget = 0;

    std::string matrix, lattice, polys, graph, config, grading, f_grading, g_grading, below, spec = "identity";
    std::vector<std::string> gens;
    std::size_t vars = 0;

    std::string seed_example, out_dir = ".";
};

SearchLimits limits_of(const Options& o)
{
    SearchLimits l = o.time_limit > 0 ? SearchLimits::with_seconds(o.time_limit) : SearchLimits{};
    l.max_lp_calls = o.budget;
    l.max_nodes = o.budget;
    return l;
}

struct Base {
    VectorConfiguration a;
    Grading g{Lattice(0)};
};

Base load_base(const Options& o)
{
    const int given = !o.graph.empty() + !o.config.empty() + !o.grading.empty();
    if (given != 1)
        throw ParseError("give exactly one of --graph, --config, --grading");
    Base b;
    if (!o.graph.empty()) {
        b.a = graph_configuration(parse_graph(read_text_file(o.graph)));
        b.g = Grading::from_configuration(b.a);
    } else if (!o.config.empty()) {
        b.a = parse_configuration(read_text_file(o.config));
        b.g = Grading::from_configuration(b.a);
    } else {
        b.g = parse_grading(read_text_file(o.grading));
        b.a = b.g.configuration();
    }
    return b;
}

// A grading file starts with a single number; anything else is read as a configuration.
Grading load_grading_file(const std::string& path)
{
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> first;
    while (first.empty() && std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            first.push_back(tok);
    }
    return first.size() == 1 ? parse_grading(text) : Grading::from_configuration(parse_configuration(text));
}

Grading load_grading_file(const std::string& path, std::size_t n)
{
    Grading g = load_grading_file(path);
    if (g.ambient_rank() != n)
        throw DimensionError(path + " has " + std::to_string(g.ambient_rank()) + " variables, expected " +
                             std::to_string(n));
    return g;
}

Grading load_spec(const Options& o, const Base& b)
{
    if (o.spec == "identity")
        return b.g;
    if (o.spec == "zero")
        return Grading::coarsest(b.g.ambient_rank());
    return load_grading_file(o.spec, b.g.ambient_rank());
}

std::vector<NamedGenerators> load_gens(const Options& o, std::size_t n)
{
    std::vector<NamedGenerators> sets;
    for (const auto& path : o.gens)
        sets.push_back({std::filesystem::path(path).stem().string(), parse_polynomials(read_text_file(path), n)});
    return sets;
}

std::string e_label(std::size_t v)
{
    return "E" + std::to_string(v + 1);
}

json jnonfaces(const NonfaceFamily& nf, const VectorConfiguration& a)
{
    json vs = json::array();
    for (std::size_t i = 0; i < nf.minimal_nonfaces.size(); ++i) {
        const IndexSet cols = nf.columns_of(i);
        vs.push_back({{"name", e_label(i)}, {"columns", jset1(cols)}, {"labels", render_column_set(cols, a)}});
    }
    return vs;
}

json jfacets(const SimplicialComplex& c)
{
    json fs = json::array();
    for (const auto& f : c.facets()) {
        std::string s = "{";
        for (std::size_t k = 0; k < f.size(); ++k)
            s += (k ? "," : "") + e_label(f[k]);
        fs.push_back(s + "}");
    }
    return fs;
}

json jcomplex(const SimplicialComplex& c)
{
    return {{"vertices", c.vertices().size()}, {"dimension", c.dimension()}, {"facet_count", c.facets().size()},
            {"facets", jfacets(c)}};
}

json jcover(const CoverReport& r)
{
    json ps = json::array();
    for (const auto& p : r.polynomials) {
        json vs = json::array();
        for (auto v : p.vertices)
            vs.push_back(e_label(v));
        ps.push_back({{"homogeneous", p.homogeneous},
                      {"components", p.components},
                      {"monomials", p.monomials},
                      {"vertices", vs},
                      {"simplex", p.simplex}});
    }
    json un = json::array();
    for (auto v : r.uncovered)
        un.push_back(e_label(v));
    return {{"passes", r.passes()},
            {"spanning", r.spanning},
            {"homogeneous_are_simplices", r.homogeneous_are_simplices},
            {"uncovered", un},
            {"polynomials", ps}};
}

json run_bounds(const Options& o)
{
    Base b = load_base(o);
    Grading f = load_spec(o, b);
    auto sets = load_gens(o, b.g.ambient_rank());
    BoundReport r = bound_report(b.g, f, sets, limits_of(o));
    const VectorConfiguration& a = b.g.configuration();

    json upper = json::array();
    for (const auto& s : r.generator_sets)
        upper.push_back({{"name", s.name},
                         {"size", s.size},
                         {"certifies", s.certifies},
                         {"total_monomials", s.total_monomials},
                         {"total_components", s.total_components},
                         {"meets_monomial_floor", s.meets_monomial_floor},
                         {"meets_component_floor", s.meets_component_floor},
                         {"cover", jcover(s.cover)}});
    json matching = json::array();
    for (const auto& m : r.delta.matching) {
        std::string s = "{";
        for (std::size_t k = 0; k < m.size(); ++k)
            s += (k ? "," : "") + e_label(m[k]);
        matching.push_back(s + "}");
    }
    json coloring = json::array();
    const VertexSet vs = r.complex_fg.vertices();
    for (std::size_t k = 0; k < r.coloring.coloring.size(); ++k)
        coloring.push_back(e_label(vs[k]) + ":" + std::to_string(r.coloring.coloring[k]));

    std::string bracket = std::to_string(r.lower_bound) + " <= ara_F <= ";
    bracket += r.upper_bound ? std::to_string(*r.upper_bound) : "?";
    std::string chain = "ht " + std::to_string(r.height) + " <= " +
                        std::to_string(std::max(r.gamma, r.delta.delta)) + " <= ara_F";
    if (r.upper_bound)
        chain += " <= " + std::to_string(*r.upper_bound);

    json omega = json::array();
    for (auto w : r.delta.omega)
        omega.push_back(w);
    return {{"vertices", jnonfaces(r.nonfaces, a)},
            {"complex_GG", jcomplex(r.complex_gg)},
            {"facets", jfacets(r.complex_fg)},
            {"complex_FG", jcomplex(r.complex_fg)},
            {"omega", omega},
            {"gamma", r.gamma},
            {"delta", r.delta.delta},
            {"height", r.height},
            {"floors", {{"monomials", r.monomial_floor}, {"components", r.component_floor}}},
            {"upper_bounds", upper},
            {"lower_bound", r.lower_bound},
            {"upper_bound", r.upper_bound ? json(*r.upper_bound) : json(nullptr)},
            {"bracket", bracket},
            {"chain", chain},
            {"witnesses",
             {{"matching", matching}, {"coloring", coloring}, {"clique_bound", r.coloring.clique_bound}}},
            {"certified", r.certified},
            {"conclusions", r.conclusions}};
}

json run_command(const std::string& cmd, const Options& o, bool& uncertified)
{
    if (cmd == "snf") {
        IntMatrix m = parse_matrix(read_text_file(o.matrix));
        SnfResult s = snf(m);
        json d = json::array();
        for (const auto& x : s.diagonal)
            d.push_back(jint(x));
        return {{"diagonal", d}, {"left", jmatrix(s.left)}, {"right", jmatrix(s.right)}, {"hnf", jmatrix(hnf(m))}};
    }
    if (cmd == "saturate") {
        IntMatrix m = parse_matrix(read_text_file(o.lattice));
        Lattice l = Lattice::from_generators(m);
        Lattice s = saturate(l);
        return {{"saturated", is_saturated(l)},
                {"rank", s.rank()},
                {"basis", jmatrix(s.basis())},
                {"group", jgroup(group_structure(l))},
                {"configuration", jmatrix(configuration_from_lattice(l).matrix())}};
    }
    if (cmd == "grading-check" || cmd == "meet" || cmd == "join") {
        Grading g = load_grading_file(o.g_grading);
        Grading f = load_grading_file(o.f_grading, g.ambient_rank());
        if (cmd == "meet")
            return jgrading(meet(f, g));
        if (cmd == "join")
            return jgrading(join(f, g));
        return {{"specialization", is_specialization(f, g)},
                {"equivalent", is_equivalent(f, g)},
                {"F", jgrading(f)},
                {"G", jgrading(g)}};
    }
    if (cmd == "finest") {
        if (o.vars == 0 && o.below.empty())
            throw ParseError("finest needs --vars or --below");
        if (!o.below.empty()) {
            Grading g = load_grading_file(o.below);
            return jgrading(finest_grading_below(parse_polynomials(read_text_file(o.polys), g.ambient_rank()), g));
        }
        return jgrading(finest_grading(parse_polynomials(read_text_file(o.polys), o.vars), o.vars));
    }
    if (cmd == "positive") {
        Base b = load_base(o);
        PositivityWitness w = is_positive(b.g);
        json out = {{"positive", w.positive()}};
        if (w.covector)
            out["covector"] = jrat(*w.covector);
        if (w.violating)
            out["violating"] = jvec(*w.violating);
        if (w.positive()) {
            json m = json::array();
            for (const auto& x : positive_integer_specialization(b.g))
                m.push_back(jint(x));
            out["integer_degrees"] = m;
        }
        return out;
    }
    if (cmd == "circuits") {
        Base b = load_base(o);
        std::vector<Circuit> cs = circuits(b.a, o.budget ? o.budget : 20);
        json list = json::array();
        for (const auto& c : cs)
            list.push_back({{"vector", jvec(c.vector)},
                            {"binomial",
                             render_polynomial(Polynomial::binomial(c.positive_part(), c.negative_part()), b.a)}});
        return {{"count", cs.size()}, {"circuits", list}};
    }
    if (cmd == "nonfaces") {
        Base b = load_base(o);
        NonfaceFamily nf = minimal_nonfaces(b.a, limits_of(o));
        return {{"rays", jset1(nf.ray_columns)}, {"count", nf.minimal_nonfaces.size()},
                {"nonfaces", jnonfaces(nf, b.a)}};
    }
    if (cmd == "complex") {
        Base b = load_base(o);
        Grading f = load_spec(o, b);
        if (!is_specialization(f, b.g))
            throw PreconditionError("the --spec grading is not a specialization of the base grading");
        const SearchLimits lim = limits_of(o);
        NonfaceFamily nf = minimal_nonfaces(b.g.configuration(), lim);
        SimplicialComplex c = build_complex(project(b.g.configuration(), f.configuration()), nf, lim);
        json out = {{"vertices", jnonfaces(nf, b.g.configuration())}};
        out.update(jcomplex(c));
        out["text"] = format_complex(c);
        return out;
    }
    if (cmd == "bounds") {
        json out = run_bounds(o);
        uncertified = !out["certified"].get<bool>();
        return out;
    }
    if (cmd == "verify-cover") {
        Base b = load_base(o);
        Grading f = load_spec(o, b);
        if (!is_specialization(f, b.g))
            throw PreconditionError("the --spec grading is not a specialization of the base grading");
        const SearchLimits lim = limits_of(o);
        const VectorConfiguration& a = b.g.configuration();
        NonfaceFamily nf = minimal_nonfaces(a, lim);
        SimplicialComplex c = build_complex(project(a, f.configuration()), nf, lim);
        json out = json::object();
        for (const auto& set : load_gens(o, b.g.ambient_rank()))
            out[set.name] = jcover(verify_cover_conditions(set.polynomials, f, c, a, nf));
        return out;
    }
    throw ParseError("unknown command " + cmd);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact multigrading specializations and arithmetical-rank bounds for lattice ideals"};
    Options o;
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--time-limit", o.time_limit, "Seconds before exponential searches stop");
    app.add_option("--budget", o.budget, "Cap on LP calls / search nodes (circuits: max columns)");
    app.add_option("--seed-example", o.seed_example, "Write the example input files")->check(CLI::IsMember({"cube"}));
    app.add_option("--out", o.out_dir, "Directory for --seed-example");

    auto base_opts = [&](CLI::App* s) {
        s->add_option("--graph", o.graph, "Graph file");
        s->add_option("--config", o.config, "Configuration file");
        s->add_option("--grading", o.grading, "Grading file");
    };
    auto spec_opts = [&](CLI::App* s) {
        s->add_option("--spec", o.spec, "identity, zero, or a configuration/grading file");
    };

    app.add_subcommand("snf", "Smith and Hermite normal forms")->add_option("--matrix", o.matrix)->required();
    app.add_subcommand("saturate", "Saturation of a lattice")->add_option("--lattice", o.lattice)->required();
    for (const char* name : {"grading-check", "meet", "join"}) {
        auto* s = app.add_subcommand(name, std::string(name) == "grading-check" ? "Is F a specialization of G" : std::string(name) + " of gradings F and G");
        s->add_option("--f", o.f_grading, "F (grading or configuration file)")->required();
        s->add_option("--g", o.g_grading, "G (grading or configuration file)")->required();
    }
    {
        auto* s = app.add_subcommand("finest", "Finest grading making polynomials homogeneous");
        s->add_option("--polys", o.polys)->required();
        s->add_option("--vars", o.vars, "Number of variables");
        s->add_option("--below", o.below, "Restrict to specializations of this grading");
    }
    base_opts(app.add_subcommand("positive", "Positivity of the grading, with a witness"));
    base_opts(app.add_subcommand("circuits", "Circuits of the configuration"));
    base_opts(app.add_subcommand("nonfaces", "Extreme rays and minimal non-faces of the cone"));
    {
        auto* s = app.add_subcommand("complex", "The complex D_F^G");
        base_opts(s);
        spec_opts(s);
    }
    for (const auto& [name, what] : {std::pair{"bounds", "Lower and upper bounds on the arithmetical rank"},
                                     std::pair{"verify-cover", "Necessary conditions for generating up to radical"}}) {
        auto* s = app.add_subcommand(name, what);
        base_opts(s);
        spec_opts(s);
        s->add_option("--gens", o.gens, "Polynomial files (repeatable)");
    }
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (!o.seed_example.empty()) {
            for (const auto& p : cube::write_seed_files(o.out_dir))
                std::cout << p << '\n';
            if (app.get_subcommands().empty())
                return ok;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return input_error;
        }
        const std::string cmd = app.get_subcommands().front()->get_name();
        bool uncertified = false;
        json out = run_command(cmd, o, uncertified);
        if (o.format == "json")
            std::cout << out.dump(2) << '\n';
        else
            render_text(std::cout, out, 0);
        return uncertified ? budget : ok;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return precondition;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return budget;
    }
}
