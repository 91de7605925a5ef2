#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace latgrade {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class VectorConfiguration;

/// Dense row-major matrix of unbounded integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    /// `cols` is needed to give an empty row list a shape.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> row_vectors() const;

    IntMatrix transpose() const;
    void append_row(const IntVector& r);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

Integer content(const IntVector& v);
/// Divides by the content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
bool is_zero(const IntVector& v);
/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RatVector& v);
Rational dot(const RatVector& a, const IntVector& b);

/// U * M * Q = diag(diagonal) with U, Q unimodular.
struct SnfResult {
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> diagonal; ///< length min(rows, cols); nonzero entries first
};

/// Sublattice of Z^n, stored as its canonical row Hermite normal form.
class Lattice {
public:
    explicit Lattice(std::size_t ambient_rank = 0);

    static Lattice from_generators(const IntMatrix& generators);
    static Lattice full(std::size_t n);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    /// Canonical coset representative: every pivot coordinate lands in [0, pivot).
    IntVector reduce(const IntVector& v) const;
    bool contains(const IntVector& v) const;

    bool operator==(const Lattice& other) const = default;

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

/// Z^free_rank + Z/t_1 + ... with t_i | t_{i+1}, t_i > 1.
struct GroupStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const GroupStructure& other) const = default;
};

IntMatrix hnf(const IntMatrix& m);
SnfResult snf(const IntMatrix& m);

/// Full integer kernel {u : M u = 0}.
Lattice kernel_basis(const IntMatrix& m);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);
/// true iff small is a sublattice of big.
bool lattice_contains(const Lattice& big, const Lattice& small);
Lattice saturate(const Lattice& l);
bool is_saturated(const Lattice& l);

/// Columns of the last n-k rows of U from the Smith form of the basis columns.
/// The result A satisfies kernel_basis(A) == saturate(l). A full-rank lattice gives
/// the empty configuration in Z^0.
VectorConfiguration configuration_from_lattice(const Lattice& l);
GroupStructure group_structure(const Lattice& l);

} // namespace latgrade
