#include "latgrade/linalg.hpp"

#include <numeric>
#include <optional>

#include "latgrade/errors.hpp"
#include "latgrade/vector_configuration.hpp"

namespace latgrade {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(0, cols);
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const
{
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::append_row(const IntVector& r)
{
    if (r.size() != cols_)
        throw DimensionError("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v)
{
    if (a.cols() != v.size())
        throw DimensionError("matrix-vector shape mismatch");
    IntVector out(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

Integer determinant(const IntMatrix& input)
{
    if (input.rows() != input.cols())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Unimodular row reduction of m into canonical Hermite form; the same row
// operations are applied to `track` when given. Returns the number of nonzero rows.
std::size_t echelonize(IntMatrix& m, IntMatrix* track)
{
    auto swap = [&](std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        if (track)
            track->swap_rows(a, b);
    };
    auto add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        m.add_row_multiple(dst, src, f);
        if (track)
            track->add_row_multiple(dst, src, f);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m(i, c) != 0 && (!best || abs(m(i, c)) < abs(m(*best, c))))
                    best = i;
            if (!best)
                break;
            swap(r, *best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0)
                    continue;
                Integer q = m(i, c) / m(r, c);
                add(i, r, -q);
                if (m(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (m(r, c) == 0)
            continue;
        if (m(r, c) < 0) {
            m.negate_row(r);
            if (track)
                track->negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i)
            add(i, r, -floor_div(m(i, c), m(r, c)));
        ++r;
    }
    return r;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t count)
{
    IntMatrix out(0, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        out.append_row(m.row(i));
    return out;
}

void require_same_ambient(const Lattice& a, const Lattice& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("lattices live in different ambient ranks");
}

} // namespace

std::size_t rank(const IntMatrix& m)
{
    IntMatrix copy = m;
    return echelonize(copy, nullptr);
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector primitive(const IntVector& v)
{
    Integer g = content(v);
    if (g == 0 || g == 1)
        return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

IntVector clear_denominators(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_num() * (l / v[i].get_den());
    return out;
}

Rational dot(const RatVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw DimensionError("dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0)
            s += a[i] * Rational(b[i]);
    return s;
}

IntMatrix hnf(const IntMatrix& m)
{
    IntMatrix work = m;
    std::size_t r = echelonize(work, nullptr);
    return top_rows(work, r);
}

SnfResult snf(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix q = IntMatrix::identity(cols);

    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_row_multiple(dst, src, f);
        u.add_row_multiple(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_col_multiple(dst, src, f);
        q.add_col_multiple(dst, src, f);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        q.swap_cols(a, b);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
                    best = {i, j};
        if (!best)
            break;
        row_swap(t, best->first);
        col_swap(t, best->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                row_add(i, t, -(d(i, t) / d(t, t)));
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                col_add(j, t, -(d(t, j) / d(t, t)));
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // A remainder is smaller than the pivot; move the smallest one in.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            // Divisibility chain: pull in a row with an entry the pivot does not divide.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < rows && !offender; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            row_add(t, *offender, Integer(1));
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult result{std::move(u), std::move(q), {}};
    for (std::size_t i = 0; i < steps; ++i)
        result.diagonal.push_back(d(i, i));
    return result;
}

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

Lattice Lattice::from_generators(const IntMatrix& generators)
{
    Lattice l(generators.cols());
    l.basis_ = hnf(generators);
    return l;
}

Lattice Lattice::full(std::size_t n)
{
    return from_generators(IntMatrix::identity(n));
}

IntVector Lattice::reduce(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("vector length differs from lattice ambient rank");
    IntVector out = v;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        while (basis_(i, pivot) == 0)
            ++pivot;
        Integer q = floor_div(out[pivot], basis_(i, pivot));
        if (q != 0)
            for (std::size_t j = pivot; j < ambient_; ++j)
                out[j] -= q * basis_(i, j);
    }
    return out;
}

bool Lattice::contains(const IntVector& v) const
{
    return is_zero(reduce(v));
}

Lattice kernel_basis(const IntMatrix& m)
{
    const std::size_t n = m.cols();
    IntMatrix t = m.transpose();
    IntMatrix track = IntMatrix::identity(n);
    std::size_t r = echelonize(t, &track);
    IntMatrix gens(0, n);
    for (std::size_t i = r; i < n; ++i)
        gens.append_row(track.row(i));
    return Lattice::from_generators(gens);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b)
{
    require_same_ambient(a, b);
    IntMatrix stacked = a.basis();
    for (std::size_t i = 0; i < b.rank(); ++i)
        stacked.append_row(b.basis().row(i));
    return Lattice::from_generators(stacked);
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b)
{
    require_same_ambient(a, b);
    const std::size_t n = a.ambient_rank();
    const std::size_t ka = a.rank();
    const std::size_t kb = b.rank();
    // (x, y) with x*Ba = y*Bb, i.e. kernel of [Ba^T | -Bb^T].
    IntMatrix block(n, ka + kb);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ka; ++j)
            block(i, j) = a.basis()(j, i);
        for (std::size_t j = 0; j < kb; ++j)
            block(i, ka + j) = -b.basis()(j, i);
    }
    Lattice coeffs = kernel_basis(block);
    IntMatrix gens(0, n);
    for (std::size_t r = 0; r < coeffs.rank(); ++r) {
        IntVector x(n, Integer(0));
        for (std::size_t j = 0; j < ka; ++j)
            if (coeffs.basis()(r, j) != 0)
                for (std::size_t c = 0; c < n; ++c)
                    x[c] += coeffs.basis()(r, j) * a.basis()(j, c);
        gens.append_row(x);
    }
    return Lattice::from_generators(gens);
}

bool lattice_contains(const Lattice& big, const Lattice& small)
{
    require_same_ambient(big, small);
    for (std::size_t i = 0; i < small.rank(); ++i)
        if (!big.contains(small.basis().row(i)))
            return false;
    return true;
}

Lattice saturate(const Lattice& l)
{
    Lattice orthogonal = kernel_basis(l.basis());
    return kernel_basis(orthogonal.basis());
}

bool is_saturated(const Lattice& l)
{
    return saturate(l) == l;
}

VectorConfiguration configuration_from_lattice(const Lattice& l)
{
    const std::size_t n = l.ambient_rank();
    const std::size_t k = l.rank();
    SnfResult s = snf(l.basis().transpose());
    const std::size_t m = n - k;
    std::vector<IntVector> cols(n, IntVector(m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < n; ++j)
            cols[j][r] = s.left(k + r, j);
    return VectorConfiguration(m, std::move(cols));
}

GroupStructure group_structure(const Lattice& l)
{
    GroupStructure g;
    g.free_rank = l.ambient_rank() - l.rank();
    SnfResult s = snf(l.basis());
    for (const auto& d : s.diagonal)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

} // namespace latgrade
