#pragma once

#include <variant>

#include "latgrade/linalg.hpp"
#include "latgrade/vector_configuration.hpp"

namespace latgrade {

/// A grading of K[x_1..x_n] by a group with n generators, presented by its
/// relation lattice L_F. Equivalent gradings have equal relation lattices.
class Grading {
public:
    explicit Grading(Lattice relations);
    /// Grading by the group ZA; the configuration is kept as the cached one.
    static Grading from_configuration(const VectorConfiguration& a);
    /// Z^n, the finest grading (zero relation lattice).
    static Grading finest(std::size_t n);
    /// The zero group O, the coarsest grading (relation lattice Z^n).
    static Grading coarsest(std::size_t n);

    std::size_t ambient_rank() const { return relations_.ambient_rank(); }
    const Lattice& relations() const { return relations_; }
    const GroupStructure& group() const { return group_; }
    /// A with kernel_basis(A) == saturate(relations()).
    const VectorConfiguration& configuration() const { return config_; }

private:
    Grading(Lattice relations, VectorConfiguration config);

    Lattice relations_;
    GroupStructure group_;
    VectorConfiguration config_;
};

/// u modulo L_F, stored as the canonical representative.
struct DegreeClass {
    IntVector representative;
    bool operator==(const DegreeClass& other) const = default;
    auto operator<=>(const DegreeClass& other) const = default;
};

struct Term {
    IntVector exponent;
    Rational coefficient;
    bool operator==(const Term& other) const = default;
};

/// Finite sum of terms with distinct exponents and nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    /// Merges equal exponents and drops zero coefficients. Exponents must be >= 0
    /// and all of the same length.
    explicit Polynomial(std::vector<Term> terms);
    /// x^plus - x^minus
    static Polynomial binomial(const IntVector& plus, const IntVector& minus);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t variables() const { return terms_.empty() ? 0 : terms_.front().exponent.size(); }

    bool operator==(const Polynomial& other) const = default;

private:
    std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);

struct PositivityWitness {
    /// c_0 with c_0 . a_i > 0 for all columns of the cached configuration.
    std::optional<RatVector> covector;
    /// nonzero u in L intersected with N^n.
    std::optional<IntVector> violating;

    bool positive() const { return covector.has_value(); }
};

/// F <= G: F is a specialization of G (L_G inside L_F).
bool is_specialization(const Grading& f, const Grading& g);
bool is_equivalent(const Grading& f, const Grading& g);
Grading meet(const Grading& f, const Grading& g);
Grading join(const Grading& f, const Grading& g);

/// Finest grading making every polynomial homogeneous.
Grading finest_grading(const std::vector<Polynomial>& polys, std::size_t n);
/// Finest grading below G making every polynomial homogeneous.
Grading finest_grading_below(const std::vector<Polynomial>& polys, const Grading& g);

DegreeClass degree(const IntVector& u, const Grading& f);
bool is_homogeneous(const Polynomial& p, const Grading& f);
/// Terms grouped by degree class, in order of first appearance.
std::vector<Polynomial> homogeneous_components(const Polynomial& p, const Grading& f);

PositivityWitness is_positive(const Grading& g);
/// Positive integers m_i such that ZM is a specialization of G.
std::vector<Integer> positive_integer_specialization(const Grading& g);

} // namespace latgrade
