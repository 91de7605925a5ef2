#pragma once

#include <string>

#include "latgrade/configuration.hpp"
#include "latgrade/grading.hpp"

namespace latgrade::cube {

/// The 3-cube with vertices 1..8 and its 12 edges.
Graph graph();
/// A_G: columns e_i + e_j, labelled "12", "14", ..., "78".
VectorConfiguration configuration();
/// The coarser configuration B in Z^4, same labels.
VectorConfiguration specialization();

/// The 28 circuit binomials of A_G: six quadrics, sixteen cubics, six quartics.
const std::vector<std::string>& circuit_expressions();
/// The first ten circuits, a minimal generating set of the toric ideal.
std::vector<Polynomial> minimal_generators();
/// Six quadric circuits plus the sum of four cubic circuits.
std::vector<Polynomial> radical_generators();
/// The six quadric circuits alone.
std::vector<Polynomial> quadric_circuits();

/// Minimal non-faces E_1..E_20 as edge labels.
const std::vector<std::vector<std::string>>& nonface_labels();

/// Writes cube.graph, A.config, B.config, circuits.txt, circuits.polys,
/// generators10.polys, radical7.polys and quadrics6.polys into `dir`.
std::vector<std::string> write_seed_files(const std::string& dir);

} // namespace latgrade::cube
