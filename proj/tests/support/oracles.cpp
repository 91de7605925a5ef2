#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace oracle {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat to_rational(const IntMatrix& m)
{
    Mat out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

// Reduced row echelon form in place; returns the rank and the sign-carrying pivot product.
std::size_t eliminate(Mat& a, Rational* det = nullptr)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    Rational d = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows) {
            d = 0;
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            d = -d;
        }
        d *= a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    if (r < rows)
        d = 0;
    if (det)
        *det = d;
    return r;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::size_t rank(const IntMatrix& m)
{
    Mat a = to_rational(m);
    return eliminate(a);
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    Mat a = to_rational(m);
    Rational d;
    eliminate(a, &d);
    return d.get_num();
}

Integer minor_gcd(const IntMatrix& m, std::size_t k)
{
    Integer g = 0;
    if (k == 0)
        return 1;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(rs[i], cs[j]);
            Integer d = oracle::determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

std::vector<Integer> invariant_factors(const IntMatrix& m)
{
    const std::size_t r = oracle::rank(m);
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        Integer dk = minor_gcd(m, k);
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

bool in_row_span(const IntMatrix& gens, const IntVector& v)
{
    IntMatrix ext = gens;
    ext.append_row(v);
    return oracle::rank(ext) == oracle::rank(gens);
}

bool in_row_lattice(const IntMatrix& gens, const IntVector& v)
{
    IntMatrix ext = gens;
    ext.append_row(v);
    const std::size_t r = oracle::rank(gens);
    if (oracle::rank(ext) != r)
        return false;
    if (r == 0)
        return true;
    return minor_gcd(gens, r) == minor_gcd(ext, r);
}

bool fm_feasible(const latgrade::LinearSystem& sys)
{
    // coeffs . x >= rhs, normalised so the first nonzero coefficient is +-1, tagged with the
    // set of original rows it was combined from. Chernikov's rule drops combinations of too
    // many rows; only exact duplicates are merged, since merging by tightness breaks that rule.
    using Row = std::tuple<std::vector<Rational>, Rational, std::uint64_t>;
    using Rows = std::set<Row>;
    const std::size_t n = sys.variables;
    bool contradiction = false;
    auto add = [&](Rows& rows, std::vector<Rational> coeffs, Rational rhs, std::uint64_t history) {
        Rational scale = 0;
        for (const auto& c : coeffs)
            if (c != 0) {
                scale = abs(c);
                break;
            }
        if (scale == 0) {
            contradiction |= rhs > 0;
            return;
        }
        for (auto& c : coeffs)
            c /= scale;
        rhs /= scale;
        rows.emplace(std::move(coeffs), std::move(rhs), history);
    };
    Rows rows;
    std::size_t next_bit = 0;
    for (std::size_t i = 0; i < sys.ge_rows.size(); ++i)
        add(rows, {sys.ge_rows[i].begin(), sys.ge_rows[i].end()}, sys.ge_rhs[i], 1ULL << next_bit++);
    for (std::size_t i = 0; i < sys.eq_rows.size(); ++i) {
        std::vector<Rational> r(sys.eq_rows[i].begin(), sys.eq_rows[i].end());
        add(rows, r, sys.eq_rhs[i], 1ULL << next_bit++);
        for (auto& x : r)
            x = -x;
        add(rows, r, -sys.eq_rhs[i], 1ULL << next_bit++);
    }
    if (next_bit > 64)
        throw std::logic_error("fm_feasible: too many rows");
    for (std::size_t k = 0; k < n && !contradiction; ++k) {
        Rows next;
        std::vector<const Row*> pos, neg;
        for (const auto& r : rows) {
            const Rational& lead = std::get<0>(r)[k];
            if (lead > 0)
                pos.push_back(&r);
            else if (lead < 0)
                neg.push_back(&r);
            else
                add(next, std::get<0>(r), std::get<1>(r), std::get<2>(r));
        }
        for (const Row* p : pos)
            for (const Row* q : neg) {
                const std::uint64_t h = std::get<2>(*p) | std::get<2>(*q);
                if (static_cast<std::size_t>(std::popcount(h)) > k + 2)
                    continue;
                const auto& pc = std::get<0>(*p);
                const auto& qc = std::get<0>(*q);
                std::vector<Rational> c(n);
                for (std::size_t j = 0; j < n; ++j)
                    c[j] = -qc[k] * pc[j] + pc[k] * qc[j];
                add(next, std::move(c), -qc[k] * std::get<1>(*p) + pc[k] * std::get<1>(*q), h);
            }
        rows = std::move(next);
    }
    return !contradiction;
}

FiniteGroup::Element FiniteGroup::add(const Element& a, const Element& b) const
{
    Element out(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i)
        out[i] = (a[i] + b[i]) % moduli[i];
    return out;
}

long FiniteGroup::exponent() const
{
    long e = 1;
    for (auto m : moduli)
        e = std::lcm(e, m);
    return e;
}

IntMatrix relation_generators(const FiniteGroup& group, const std::vector<FiniteGroup::Element>& gens)
{
    const std::size_t n = gens.size();
    const long e = group.exponent();
    IntMatrix out(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector v(n);
        v[i] = e;
        out.append_row(v);
    }
    std::vector<long> u(n, 0);
    while (true) {
        FiniteGroup::Element s = group.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (long k = 0; k < u[i]; ++k)
                s = group.add(s, gens[i]);
        if (s == group.zero() && std::any_of(u.begin(), u.end(), [](long x) { return x != 0; })) {
            IntVector v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = u[i];
            out.append_row(v);
        }
        std::size_t i = 0;
        while (i < n && ++u[i] == e)
            u[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

bool generator_map_is_function(const FiniteGroup& g, const std::vector<FiniteGroup::Element>& gs,
                               const FiniteGroup& f, const std::vector<FiniteGroup::Element>& fs)
{
    using Pair = std::pair<FiniteGroup::Element, FiniteGroup::Element>;
    std::set<Pair> seen{{g.zero(), f.zero()}};
    std::vector<Pair> frontier{{g.zero(), f.zero()}};
    while (!frontier.empty()) {
        Pair p = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < gs.size(); ++i) {
            Pair q{g.add(p.first, gs[i]), f.add(p.second, fs[i])};
            if (seen.insert(q).second)
                frontier.push_back(q);
        }
    }
    std::map<FiniteGroup::Element, FiniteGroup::Element> image;
    for (const auto& [a, b] : seen) {
        auto [it, fresh] = image.emplace(a, b);
        if (!fresh && it->second != b)
            return false;
    }
    return true;
}

std::size_t min_face_partition(std::size_t n, const std::function<bool(std::uint64_t)>& is_face)
{
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<bool> face(full + 1);
    for (std::uint64_t s = 1; s <= full; ++s)
        face[s] = is_face(s);
    const std::size_t inf = n + 1;
    std::vector<std::size_t> best(full + 1, inf);
    best[0] = 0;
    for (std::uint64_t s = 1; s <= full; ++s) {
        const std::uint64_t low = s & (~s + 1);
        // every part containing the lowest vertex
        for (std::uint64_t t = s; t; t = (t - 1) & s)
            if ((t & low) && face[t] && best[s & ~t] + 1 < best[s])
                best[s] = best[s & ~t] + 1;
    }
    return best[full];
}

std::size_t chromatic_number(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    if (n == 0)
        return 0;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (auto [i, j] : edges)
        adj[i - 1][j - 1] = adj[j - 1][i - 1] = true;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> color(n, 0);
        std::function<bool(std::size_t)> place = [&](std::size_t v) {
            if (v == n)
                return true;
            for (std::size_t c = 1; c <= k; ++c) {
                bool okc = true;
                for (std::size_t u = 0; u < v && okc; ++u)
                    okc = !(adj[u][v] && color[u] == c);
                if (!okc)
                    continue;
                color[v] = c;
                if (place(v + 1))
                    return true;
            }
            color[v] = 0;
            return false;
        };
        if (place(0))
            return k;
    }
}

} // namespace oracle
