#include "latgrade/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "latgrade/errors.hpp"

namespace latgrade {

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

// Lines with comments stripped; blank lines are kept so callers can use them as separators.
class Lines {
public:
    explicit Lines(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos)
                line.erase(h);
            lines_.push_back(split(line));
        }
    }

    void skip_blank()
    {
        while (pos_ < lines_.size() && lines_[pos_].empty())
            ++pos_;
    }
    bool done()
    {
        skip_blank();
        return pos_ >= lines_.size();
    }
    bool at_blank() const { return pos_ >= lines_.size() || lines_[pos_].empty(); }
    const std::vector<std::string>& next()
    {
        skip_blank();
        if (pos_ >= lines_.size())
            throw ParseError("unexpected end of input");
        return lines_[pos_++];
    }
    const std::vector<std::string>& peek()
    {
        skip_blank();
        if (pos_ >= lines_.size())
            throw ParseError("unexpected end of input");
        return lines_[pos_];
    }
    std::size_t line_number() const { return pos_; }

private:
    std::vector<std::vector<std::string>> lines_;
    std::size_t pos_ = 0;
};

Integer parse_integer(const std::string& tok)
{
    std::size_t i = (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size())
        throw ParseError("expected an integer, got '" + tok + "'");
    for (std::size_t k = i; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k])))
            throw ParseError("expected an integer, got '" + tok + "'");
    return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

std::size_t parse_count(const std::string& tok)
{
    Integer v = parse_integer(tok);
    if (v < 0 || !v.fits_ulong_p())
        throw ParseError("expected a nonnegative count, got '" + tok + "'");
    return v.get_ui();
}

IntMatrix read_matrix(Lines& in)
{
    const auto& head = in.next();
    if (head.size() != 2)
        throw ParseError("matrix header must be 'rows cols'");
    const std::size_t r = parse_count(head[0]);
    const std::size_t c = parse_count(head[1]);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = in.next();
        if (row.size() != c)
            throw ParseError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = parse_integer(row[j]);
    }
    return m;
}

void expect_end(Lines& in, const char* what)
{
    if (!in.done())
        throw ParseError(std::string("trailing input after ") + what);
}

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

} // namespace

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << text;
}

IntMatrix parse_matrix(const std::string& text)
{
    Lines in(text);
    IntMatrix m = read_matrix(in);
    expect_end(in, "matrix");
    return m;
}

std::string format_matrix(const IntMatrix& m)
{
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

Lattice parse_lattice(const std::string& text, std::size_t ambient_rank)
{
    IntMatrix m = parse_matrix(text);
    if (m.cols() != ambient_rank)
        throw DimensionError("lattice generators have " + std::to_string(m.cols()) + " entries, expected " +
                             std::to_string(ambient_rank));
    return Lattice::from_generators(m);
}

std::string format_lattice(const Lattice& l)
{
    return format_matrix(l.basis());
}

Grading parse_grading(const std::string& text)
{
    Lines in(text);
    const auto& head = in.next();
    if (head.size() != 1)
        throw ParseError("grading must start with the number of variables");
    const std::size_t n = parse_count(head[0]);
    IntMatrix m = read_matrix(in);
    expect_end(in, "grading");
    if (m.cols() != n)
        throw DimensionError("relation lattice generators must have " + std::to_string(n) + " entries");
    return Grading(Lattice::from_generators(m));
}

std::string format_grading(const Grading& g)
{
    return std::to_string(g.ambient_rank()) + "\n" + format_lattice(g.relations());
}

VectorConfiguration parse_configuration(const std::string& text)
{
    Lines in(text);
    std::vector<std::string> labels;
    if (!in.done() && in.peek().front() == "labels") {
        const auto& line = in.next();
        labels.assign(line.begin() + 1, line.end());
    }
    IntMatrix m = read_matrix(in);
    expect_end(in, "configuration");
    if (!labels.empty() && labels.size() != m.cols())
        throw ParseError("configuration has " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(m.cols()) + " columns");
    try {
        return VectorConfiguration::from_matrix(m, labels);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string format_configuration(const VectorConfiguration& a)
{
    std::string out;
    if (a.has_labels()) {
        out = "labels";
        for (const auto& l : a.labels())
            out += " " + l;
        out += "\n";
    }
    return out + format_matrix(a.matrix());
}

Graph parse_graph(const std::string& text)
{
    Lines in(text);
    const auto& head = in.next();
    if (head.size() != 2 || head[0] != "vertices")
        throw ParseError("graph must start with 'vertices k'");
    const std::size_t k = parse_count(head[1]);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (!in.done()) {
        const auto& e = in.next();
        if (e.size() != 2)
            throw ParseError("edge lines must be 'i j'");
        const std::size_t i = parse_count(e[0]), j = parse_count(e[1]);
        if (i < 1 || j > k || i >= j)
            throw ParseError("edge " + e[0] + " " + e[1] + " must satisfy 1 <= i < j <= " + std::to_string(k));
        edges.emplace_back(i, j);
    }
    try {
        return Graph(k, edges);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << '\n';
    for (auto [i, j] : g.edges())
        out << i << ' ' << j << '\n';
    return out.str();
}

Rational parse_rational(const std::string& token)
{
    const auto slash = token.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(token));
    Integer num = parse_integer(token.substr(0, slash));
    const std::string den_text = token.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("denominator must be unsigned in '" + token + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw ParseError("zero denominator in '" + token + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Polynomial> parse_polynomials(const std::string& text, std::size_t n)
{
    Lines in(text);
    std::vector<Polynomial> out;
    while (!in.done()) {
        std::vector<Term> terms;
        while (!in.at_blank()) {
            const auto& t = in.next();
            if (t.size() != n + 1)
                throw ParseError("polynomial term needs a coefficient and " + std::to_string(n) + " exponents");
            Term term{IntVector(n), parse_rational(t[0])};
            for (std::size_t i = 0; i < n; ++i) {
                term.exponent[i] = parse_integer(t[i + 1]);
                if (term.exponent[i] < 0)
                    throw ParseError("negative exponent in polynomial term");
            }
            terms.push_back(std::move(term));
        }
        Polynomial p(std::move(terms));
        if (p.is_zero())
            throw ParseError("polynomial " + std::to_string(out.size() + 1) + " is zero");
        out.push_back(std::move(p));
    }
    return out;
}

std::string format_polynomials(const std::vector<Polynomial>& polys)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (k)
            out << '\n';
        for (const auto& t : polys[k].terms()) {
            out << format_rational(t.coefficient);
            for (const auto& e : t.exponent)
                out << ' ' << e.get_str();
            out << '\n';
        }
    }
    return out.str();
}

Polynomial parse_polynomial_expression(const std::string& expr, const VectorConfiguration& a)
{
    const std::size_t n = a.size();
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i])))
            ++i;
    };
    auto read_number = [&] {
        std::size_t start = i;
        while (i < expr.size() && (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '/'))
            ++i;
        return expr.substr(start, i - start);
    };
    skip_ws();
    if (i == expr.size())
        throw ParseError("empty polynomial expression");
    while (i < expr.size()) {
        Rational sign = 1;
        skip_ws();
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!terms.empty()) {
            throw ParseError("expected '+' or '-' in '" + expr + "'");
        }
        Term t{IntVector(n), sign};
        bool expect_factor = true;
        bool any_factor = false;
        while (expect_factor) {
            skip_ws();
            if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                t.coefficient *= parse_rational(read_number());
            } else if (i < expr.size() && expr[i] == 'x') {
                ++i;
                std::size_t start = i;
                while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_'))
                    ++i;
                const std::string label = expr.substr(start, i - start);
                auto idx = a.index_of(label);
                if (!idx)
                    throw ParseError("unknown variable x" + label);
                Integer power = 1;
                skip_ws();
                if (i < expr.size() && expr[i] == '^') {
                    ++i;
                    skip_ws();
                    power = parse_integer(read_number());
                }
                t.exponent[*idx] += power;
            } else {
                throw ParseError("expected a coefficient or variable in '" + expr + "'");
            }
            any_factor = true;
            skip_ws();
            expect_factor = i < expr.size() && expr[i] == '*';
            if (expect_factor)
                ++i;
        }
        if (!any_factor)
            throw ParseError("empty term in '" + expr + "'");
        terms.push_back(std::move(t));
        skip_ws();
    }
    Polynomial p(std::move(terms));
    if (p.is_zero())
        throw ParseError("expression '" + expr + "' is the zero polynomial");
    return p;
}

std::string render_polynomial(const Polynomial& p, const VectorConfiguration& a)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.exponent.size(); ++i) {
            if (t.exponent[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + a.label(i);
            if (t.exponent[i] > 1)
                mono += "^" + t.exponent[i].get_str();
        }
        if (mono.empty())
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

SimplicialComplex parse_complex(const std::string& text)
{
    Lines in(text);
    const auto& head = in.next();
    if (head.size() != 2 || head[0] != "complex")
        throw ParseError("complex must start with 'complex f'");
    const std::size_t f = parse_count(head[1]);
    std::vector<IndexSet> labels;
    for (std::size_t i = 0; i < f; ++i) {
        IndexSet s;
        for (const auto& tok : in.next()) {
            std::size_t c = parse_count(tok);
            if (c == 0)
                throw ParseError("column indices are 1-based");
            s.push_back(c - 1);
        }
        labels.push_back(std::move(s));
    }
    const auto& fh = in.next();
    if (fh.size() != 2 || fh[0] != "facets")
        throw ParseError("expected 'facets k'");
    const std::size_t k = parse_count(fh[1]);
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet s;
        for (const auto& tok : in.next()) {
            std::size_t v = parse_count(tok);
            if (v == 0 || v > f)
                throw ParseError("facet vertex " + tok + " out of range");
            s.push_back(v - 1);
        }
        facets.push_back(std::move(s));
    }
    expect_end(in, "complex");
    return SimplicialComplex(std::move(labels), std::move(facets));
}

std::string format_complex(const SimplicialComplex& c)
{
    std::ostringstream out;
    out << "complex " << c.universe_size() << '\n';
    for (const auto& l : c.labels()) {
        for (std::size_t k = 0; k < l.size(); ++k)
            out << (k ? " " : "") << l[k] + 1;
        out << '\n';
    }
    out << "facets " << c.facets().size() << '\n';
    for (const auto& f : c.facets()) {
        for (std::size_t k = 0; k < f.size(); ++k)
            out << (k ? " " : "") << f[k] + 1;
        out << '\n';
    }
    return out.str();
}

std::string render_column_set(const IndexSet& columns, const VectorConfiguration& a)
{
    std::string out = "{";
    for (std::size_t k = 0; k < columns.size(); ++k)
        out += (k ? "," : "") + a.label(columns[k]);
    return out + "}";
}

} // namespace latgrade
