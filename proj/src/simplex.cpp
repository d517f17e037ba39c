#include "egal/simplex.hpp"

#include <stdexcept>

namespace egal {

LinearProgram::Row& LinearProgram::add_row(RowSense sense, Rational rhs) {
    rows.push_back({std::vector<Rational>(variables, Rational(0)), sense, std::move(rhs)});
    return rows.back();
}

namespace {

// Dense tableau in equality form. Column layout: structural variables,
// then slack/surplus variables, then artificials; Bland's rule uses this
// order, so the caller's variable order decides degenerate ties.
struct Tableau {
    int structurals = 0;
    int firstArtificial = 0;  // columns >= this are artificial
    std::vector<std::vector<Rational>> rows;  // each: coefficients + rhs
    std::vector<Rational> cost;               // phase-2 objective per column
    std::vector<int> basis;                   // basic column per row
    std::vector<int> rowUnit;                 // initial unit column per row

    int columns() const { return static_cast<int>(cost.size()); }
    Rational& rhs(int r) { return rows[r].back(); }
    const Rational& rhs(int r) const { return rows[r].back(); }

    void pivot(int row, int col) {
        Rational factor = rows[row][col];
        if (factor == 0) throw std::logic_error("pivot on zero element");
        for (auto& value : rows[row]) value /= factor;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            Rational multiple = rows[r][col];
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                rows[r][c] -= multiple * rows[row][c];
        }
        basis[row] = col;
    }
};

// One simplex run with Bland's rule on the given objective. Artificials may
// never enter. Returns false when the objective is unbounded above.
bool run_simplex(Tableau& t, const std::vector<Rational>& objective) {
    const int rowCount = static_cast<int>(t.rows.size());
    while (true) {
        // reduced costs: c_j - y . A_j, computed fresh from the tableau
        std::vector<Rational> dualBasisCost(rowCount);
        for (int r = 0; r < rowCount; ++r) dualBasisCost[r] = objective[t.basis[r]];

        int entering = -1;
        for (int j = 0; j < t.firstArtificial; ++j) {
            Rational reduced = objective[j];
            for (int r = 0; r < rowCount; ++r)
                if (dualBasisCost[r] != 0) reduced -= dualBasisCost[r] * t.rows[r][j];
            if (reduced > 0) {
                entering = j;
                break;  // Bland: lowest eligible index
            }
        }
        if (entering < 0) return true;

        int leaving = -1;
        Rational bestRatio;
        for (int r = 0; r < rowCount; ++r) {
            if (t.rows[r][entering] <= 0) continue;
            Rational ratio = t.rhs(r) / t.rows[r][entering];
            if (leaving < 0 || ratio < bestRatio ||
                (ratio == bestRatio && t.basis[r] < t.basis[leaving])) {
                leaving = r;
                bestRatio = ratio;
            }
        }
        if (leaving < 0) return false;
        t.pivot(leaving, entering);
    }
}

Rational objective_value(const Tableau& t, const std::vector<Rational>& objective) {
    Rational value = 0;
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
        if (objective[t.basis[r]] != 0) value += objective[t.basis[r]] * t.rhs(r);
    return value;
}

// Strong-duality certificate in equality form: recovers the simplex
// multipliers from the initial unit columns and verifies y.b == c.x* and
// y.A_j >= c_j for every non-artificial column of the ORIGINAL system.
void certify(const Tableau& t, const std::vector<Rational>& objective,
             const std::vector<std::vector<Rational>>& originalRows,
             const Rational& primalValue) {
    const int rowCount = static_cast<int>(t.rows.size());
    std::vector<Rational> y(rowCount);
    for (int r = 0; r < rowCount; ++r) {
        int unit = t.rowUnit[r];
        Rational reduced = objective[unit];
        for (int rr = 0; rr < rowCount; ++rr)
            if (objective[t.basis[rr]] != 0) reduced -= objective[t.basis[rr]] * t.rows[rr][unit];
        y[r] = objective[unit] - reduced;
    }
    Rational dualValue = 0;
    for (int r = 0; r < rowCount; ++r) dualValue += y[r] * originalRows[r].back();
    if (dualValue != primalValue)
        throw std::logic_error("LP certificate failed: dual objective mismatch");
    for (int j = 0; j < t.firstArtificial; ++j) {
        Rational lhs = 0;
        for (int r = 0; r < rowCount; ++r)
            if (y[r] != 0 && originalRows[r][j] != 0) lhs += y[r] * originalRows[r][j];
        if (lhs < objective[j])
            throw std::logic_error("LP certificate failed: dual constraint violated");
    }
}

}  // namespace

SimplexSolution solve_lp(const LinearProgram& lp) {
    if (static_cast<int>(lp.objective.size()) != lp.variables)
        throw std::invalid_argument("objective size mismatch");
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeffs.size()) != lp.variables)
            throw std::invalid_argument("row size mismatch");

    const int rowCount = static_cast<int>(lp.rows.size());

    // Normalized equality rows: structural coefficients, slack/surplus,
    // then the rhs. Artificial columns are appended afterwards.
    int slackCount = 0;
    for (const auto& row : lp.rows)
        if (row.sense != RowSense::Equal) ++slackCount;

    Tableau t;
    t.structurals = lp.variables;
    const int slackBase = lp.variables;
    int nextSlack = 0;

    std::vector<std::vector<Rational>> normalized(rowCount);
    std::vector<int> unitColumn(rowCount, -1);
    for (int r = 0; r < rowCount; ++r) {
        const auto& row = lp.rows[r];
        bool flip = row.rhs < 0;
        RowSense sense = row.sense;
        if (flip && sense != RowSense::Equal)
            sense = sense == RowSense::LessEqual ? RowSense::GreaterEqual : RowSense::LessEqual;

        auto& out = normalized[r];
        out.assign(lp.variables + slackCount + 1, Rational(0));
        for (int j = 0; j < lp.variables; ++j) out[j] = flip ? -row.coeffs[j] : row.coeffs[j];
        Rational rhs = flip ? -row.rhs : row.rhs;

        if (sense == RowSense::LessEqual) {
            out[slackBase + nextSlack] = 1;
            unitColumn[r] = slackBase + nextSlack++;
        } else if (sense == RowSense::GreaterEqual) {
            if (rhs == 0) {
                // negate once more so the surplus column is a unit column
                for (int j = 0; j < lp.variables; ++j) out[j] = -out[j];
                out[slackBase + nextSlack] = 1;
                unitColumn[r] = slackBase + nextSlack++;
            } else {
                out[slackBase + nextSlack] = -1;
                ++nextSlack;
            }
        }
        out.back() = rhs;
    }

    int artificialCount = 0;
    for (int r = 0; r < rowCount; ++r)
        if (unitColumn[r] < 0) ++artificialCount;

    t.firstArtificial = lp.variables + slackCount;
    const int totalColumns = t.firstArtificial + artificialCount;
    t.cost.assign(totalColumns, Rational(0));
    for (int j = 0; j < lp.variables; ++j) t.cost[j] = lp.objective[j];

    int nextArtificial = t.firstArtificial;
    std::vector<Rational> phase1(totalColumns, Rational(0));
    for (int r = 0; r < rowCount; ++r) {
        auto row = normalized[r];
        Rational rhs = row.back();
        row.pop_back();
        row.resize(totalColumns, Rational(0));
        if (unitColumn[r] < 0) {
            row[nextArtificial] = 1;
            unitColumn[r] = nextArtificial;
            phase1[nextArtificial] = -1;
            ++nextArtificial;
        }
        row.push_back(rhs);
        t.rows.push_back(std::move(row));
        t.basis.push_back(unitColumn[r]);
        t.rowUnit.push_back(unitColumn[r]);
    }

    SimplexSolution solution;
    if (artificialCount > 0) {
        if (!run_simplex(t, phase1))
            throw std::logic_error("phase 1 cannot be unbounded");
        if (objective_value(t, phase1) != 0) {
            solution.status = SolveStatus::Infeasible;
            return solution;
        }
        // Drive leftover artificials out of the basis; a row with no
        // structural support is redundant and dropped.
        for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
            if (t.basis[r] < t.firstArtificial) continue;
            int pivotCol = -1;
            for (int j = 0; j < t.firstArtificial && pivotCol < 0; ++j)
                if (t.rows[r][j] != 0) pivotCol = j;
            if (pivotCol >= 0) {
                t.pivot(r, pivotCol);
            } else {
                t.rows.erase(t.rows.begin() + r);
                t.basis.erase(t.basis.begin() + r);
                t.rowUnit.erase(t.rowUnit.begin() + r);
                normalized.erase(normalized.begin() + r);
            }
        }
    }

    std::vector<Rational> phase2(totalColumns, Rational(0));
    for (int j = 0; j < lp.variables; ++j) phase2[j] = lp.objective[j];
    if (!run_simplex(t, phase2)) {
        solution.status = SolveStatus::Unbounded;
        return solution;
    }

    solution.status = SolveStatus::Optimal;
    solution.objective = objective_value(t, phase2);
    solution.basisSize = static_cast<int>(t.rows.size());
    solution.x.assign(lp.variables, Rational(0));
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
        if (t.basis[r] < lp.variables) solution.x[t.basis[r]] = t.rhs(r);

    // Re-pad normalized rows so the certificate sees the artificial columns.
    for (auto& row : normalized) {
        Rational rhs = row.back();
        row.pop_back();
        row.resize(totalColumns, Rational(0));
        row.push_back(rhs);
    }
    for (int r = 0; r < static_cast<int>(t.rowUnit.size()); ++r)
        if (t.rowUnit[r] >= t.firstArtificial) normalized[r][t.rowUnit[r]] = 1;
    certify(t, phase2, normalized, solution.objective);
    return solution;
}

}  // namespace egal
