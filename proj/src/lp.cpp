#include "latgrade/lp.hpp"

#include <stdexcept>

#include "latgrade/errors.hpp"

namespace latgrade {

namespace {
thread_local std::size_t calls = 0;
}

std::size_t lp_call_count()
{
    return calls;
}

void LinearSystem::add_equality(RatVector row, Rational rhs)
{
    if (row.size() != variables)
        throw DimensionError("equality row has wrong length");
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_inequality(RatVector row, Rational rhs)
{
    if (row.size() != variables)
        throw DimensionError("inequality row has wrong length");
    ge_rows.push_back(std::move(row));
    ge_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_lower_bound(std::size_t var, Rational bound)
{
    RatVector row(variables, Rational(0));
    row.at(var) = 1;
    add_inequality(std::move(row), std::move(bound));
}

bool satisfies(const LinearSystem& sys, const RatVector& x)
{
    if (x.size() != sys.variables)
        return false;
    auto eval = [&](const RatVector& row) {
        Rational s = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                s += row[j] * x[j];
        return s;
    };
    for (std::size_t i = 0; i < sys.eq_rows.size(); ++i)
        if (eval(sys.eq_rows[i]) != sys.eq_rhs[i])
            return false;
    for (std::size_t i = 0; i < sys.ge_rows.size(); ++i)
        if (eval(sys.ge_rows[i]) < sys.ge_rhs[i])
            return false;
    return true;
}

namespace {

// How an original variable is expressed through nonnegative tableau columns.
struct VarMap {
    bool shifted = false; // x = lower + col
    Rational lower;
    std::size_t pos = 0;  // column of x+ (or of the shifted variable)
    std::size_t neg = 0;  // column of x- when free
};

struct Row {
    RatVector coeffs; // over original variables
    Rational rhs;
    bool inequality;
};

} // namespace

std::optional<RatVector> lp_feasible(const LinearSystem& sys)
{
    ++calls;
    const std::size_t nvars = sys.variables;
    if (sys.eq_rows.size() != sys.eq_rhs.size() || sys.ge_rows.size() != sys.ge_rhs.size())
        throw DimensionError("constraint/rhs count mismatch");
    for (const auto& r : sys.eq_rows)
        if (r.size() != nvars)
            throw DimensionError("equality row has wrong length");
    for (const auto& r : sys.ge_rows)
        if (r.size() != nvars)
            throw DimensionError("inequality row has wrong length");

    // Single-variable rows with positive coefficient become shifts x = l + y, y >= 0.
    std::vector<std::optional<Rational>> lower(nvars);
    std::vector<bool> absorbed(sys.ge_rows.size(), false);
    for (std::size_t i = 0; i < sys.ge_rows.size(); ++i) {
        const auto& row = sys.ge_rows[i];
        std::size_t nz = 0, var = 0;
        for (std::size_t j = 0; j < nvars; ++j)
            if (row[j] != 0) {
                ++nz;
                var = j;
            }
        if (nz == 1 && row[var] > 0) {
            Rational b = sys.ge_rhs[i] / row[var];
            if (!lower[var] || b > *lower[var])
                lower[var] = b;
            absorbed[i] = true;
        }
    }

    std::vector<VarMap> vmap(nvars);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
        if (lower[j]) {
            vmap[j].shifted = true;
            vmap[j].lower = *lower[j];
            vmap[j].pos = ncols++;
        } else {
            vmap[j].pos = ncols++;
            vmap[j].neg = ncols++;
        }
    }

    std::vector<Row> rows;
    for (std::size_t i = 0; i < sys.eq_rows.size(); ++i)
        rows.push_back({sys.eq_rows[i], sys.eq_rhs[i], false});
    for (std::size_t i = 0; i < sys.ge_rows.size(); ++i)
        if (!absorbed[i])
            rows.push_back({sys.ge_rows[i], sys.ge_rhs[i], true});

    const std::size_t structural = ncols;
    std::size_t slack_count = 0;
    for (const auto& r : rows)
        if (r.inequality)
            ++slack_count;
    const std::size_t m = rows.size();
    const std::size_t first_art = structural + slack_count;
    const std::size_t width = first_art + m; // rhs stored separately

    std::vector<RatVector> t(m, RatVector(width, Rational(0)));
    RatVector rhs(m);
    std::vector<std::size_t> basis(m);
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
        Rational b = rows[i].rhs;
        for (std::size_t j = 0; j < nvars; ++j) {
            const Rational& a = rows[i].coeffs[j];
            if (a == 0)
                continue;
            if (vmap[j].shifted) {
                t[i][vmap[j].pos] += a;
                b -= a * vmap[j].lower;
            } else {
                t[i][vmap[j].pos] += a;
                t[i][vmap[j].neg] -= a;
            }
        }
        if (rows[i].inequality)
            t[i][slack++] = -1;
        if (b < 0) {
            for (auto& v : t[i])
                v = -v;
            b = -b;
        }
        t[i][first_art + i] = 1;
        rhs[i] = b;
        basis[i] = first_art + i;
    }

    // Phase one: minimize the sum of artificials. Reduced costs of non-artificials.
    RatVector cost(width, Rational(0));
    Rational objective = 0; // current sum of artificials
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < first_art; ++j)
            if (t[i][j] != 0)
                cost[j] -= t[i][j];
        objective += rhs[i];
    }

    for (;;) {
        if (objective == 0)
            break;
        // Bland: lowest-index column with negative reduced cost.
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (!enter)
            break;
        const std::size_t e = *enter;
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][e] <= 0)
                continue;
            Rational ratio = rhs[i] / t[i][e];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave)
            throw std::logic_error("phase-one objective is bounded below; unbounded ray impossible");
        const std::size_t p = *leave;
        const Rational piv = t[p][e];
        for (std::size_t j = 0; j < width; ++j)
            if (t[p][j] != 0)
                t[p][j] /= piv;
        rhs[p] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == p || t[i][e] == 0)
                continue;
            const Rational f = t[i][e];
            for (std::size_t j = 0; j < width; ++j)
                if (t[p][j] != 0)
                    t[i][j] -= f * t[p][j];
            rhs[i] -= f * rhs[p];
        }
        if (cost[e] != 0) {
            const Rational f = cost[e];
            for (std::size_t j = 0; j < width; ++j)
                if (t[p][j] != 0)
                    cost[j] -= f * t[p][j];
            objective += f * rhs[p];
        }
        basis[p] = e;
    }

    if (objective != 0)
        return std::nullopt;

    RatVector col_value(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        col_value[basis[i]] = rhs[i];
    RatVector x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        if (vmap[j].shifted)
            x[j] = vmap[j].lower + col_value[vmap[j].pos];
        else
            x[j] = col_value[vmap[j].pos] - col_value[vmap[j].neg];
    }
    if (!satisfies(sys, x))
        throw std::logic_error("simplex produced a point that fails substitution");
    return x;
}

} // namespace latgrade
