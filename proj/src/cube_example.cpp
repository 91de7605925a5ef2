#include "latgrade/cube_example.hpp"

#include <filesystem>

#include "latgrade/io.hpp"

namespace latgrade::cube {

Graph graph()
{
    return Graph(8, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {3, 7}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}});
}

VectorConfiguration configuration()
{
    return graph_configuration(graph());
}

VectorConfiguration specialization()
{
    const std::vector<IntVector> b = {
        {5, 0, 3, 4}, {3, 1, 5, 5}, {4, 1, 4, 8},  {4, 0, 2, 3},  {5, 0, 1, 6}, {2, 1, 4, 4},
        {2, 1, 2, 6}, {1, 2, 5, 8}, {4, 1, 2, 10}, {2, 2, 4, 11}, {3, 1, 1, 9}, {1, 2, 3, 10},
    };
    return VectorConfiguration(4, b, configuration().labels());
}

const std::vector<std::string>& circuit_expressions()
{
    static const std::vector<std::string> list = {
        "x14*x23 - x12*x34",
        "x12*x56 - x15*x26",
        "x26*x37 - x23*x67",
        "x14*x58 - x15*x48",
        "x37*x48 - x34*x78",
        "x58*x67 - x56*x78",
        "x23*x48*x56 - x26*x34*x58",
        "x14*x37*x56 - x15*x34*x67",
        "x12*x37*x58 - x15*x23*x78",
        "x12*x48*x67 - x14*x26*x78",
        "x23*x56*x78 - x26*x37*x58",
        "x14*x56*x78 - x15*x48*x67",
        "x26*x34*x78 - x23*x48*x67",
        "x15*x34*x78 - x14*x37*x58",
        "x15*x26*x78 - x12*x58*x67",
        "x14*x23*x78 - x12*x37*x48",
        "x34*x58*x67 - x37*x48*x56",
        "x12*x34*x67 - x14*x26*x37",
        "x15*x23*x67 - x12*x37*x56",
        "x12*x34*x58 - x15*x23*x48",
        "x14*x26*x58 - x12*x48*x56",
        "x14*x23*x56 - x15*x26*x34",
        "x12*x34*x56*x78 - x15*x23*x48*x67",
        "x12*x34*x56*x78 - x14*x26*x37*x58",
        "x14*x23*x56*x78 - x15*x26*x37*x48",
        "x12*x34*x58*x67 - x15*x26*x37*x48",
        "x14*x23*x58*x67 - x12*x37*x48*x56",
        "x14*x23*x58*x67 - x15*x26*x34*x78",
    };
    return list;
}

namespace {

std::vector<Polynomial> first_circuits(std::size_t k)
{
    const VectorConfiguration a = configuration();
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(parse_polynomial_expression(circuit_expressions()[i], a));
    return out;
}

} // namespace

std::vector<Polynomial> minimal_generators()
{
    return first_circuits(10);
}

std::vector<Polynomial> quadric_circuits()
{
    return first_circuits(6);
}

std::vector<Polynomial> radical_generators()
{
    std::vector<Polynomial> out = first_circuits(10);
    Polynomial sum = out[6] + out[7] + out[8] + out[9];
    out.resize(6);
    out.push_back(sum);
    return out;
}

const std::vector<std::vector<std::string>>& nonface_labels()
{
    static const std::vector<std::vector<std::string>> e = {
        {"14", "23"}, {"12", "34"}, {"12", "56"}, {"15", "26"}, {"26", "37"},
        {"23", "67"}, {"14", "58"}, {"15", "48"}, {"37", "48"}, {"34", "78"},
        {"58", "67"}, {"56", "78"}, {"23", "48", "56"}, {"26", "34", "58"}, {"14", "37", "56"},
        {"15", "34", "67"}, {"12", "37", "58"}, {"15", "23", "78"}, {"12", "48", "67"}, {"14", "26", "78"},
    };
    return e;
}

std::vector<std::string> write_seed_files(const std::string& dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const VectorConfiguration a = configuration();
    std::vector<std::string> written;
    auto put = [&](const std::string& name, const std::string& text) {
        const std::string path = (fs::path(dir) / name).string();
        write_text_file(path, text);
        written.push_back(path);
    };
    put("cube.graph", format_graph(graph()));
    put("A.config", format_configuration(a));
    put("B.config", format_configuration(specialization()));
    std::string circuits;
    for (const auto& c : circuit_expressions())
        circuits += c + "\n";
    put("circuits.txt", circuits);
    std::vector<Polynomial> all;
    for (const auto& c : circuit_expressions())
        all.push_back(parse_polynomial_expression(c, a));
    put("circuits.polys", format_polynomials(all));
    put("generators10.polys", format_polynomials(minimal_generators()));
    put("radical7.polys", format_polynomials(radical_generators()));
    put("quadrics6.polys", format_polynomials(quadric_circuits()));
    return written;
}

} // namespace latgrade::cube
