#include "helly/lp.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace helly {

namespace {

// Dense tableau. Column layout: structural vars, then one slack/surplus per
// inequality row, then artificials. basis_[i] is the variable basic in row i.
class Tableau {
public:
    Tableau(const std::vector<LpConstraint>& constraints, const std::vector<Rat>& objective,
            long long cell_limit)
        : num_structural_(objective.size()), objective_(objective) {
        std::size_t m = constraints.size();
        std::size_t slack_count = 0;
        for (const auto& c : constraints)
            if (c.rel != Rel::EQ) ++slack_count;

        // Count artificials: GE and EQ rows get one; LE rows start on their slack.
        std::size_t art_count = 0;
        for (const auto& c : constraints)
            if (c.rel != Rel::LE) ++art_count;

        num_cols_ = num_structural_ + slack_count + art_count;
        long long cells = static_cast<long long>(m + 1) * static_cast<long long>(num_cols_ + 1);
        if (cells > cell_limit)
            throw LimitError("LP tableau exceeds cell cap", cells, cell_limit);

        rows_.assign(m, std::vector<Rat>(num_cols_, Rat(0)));
        rhs_.assign(m, Rat(0));
        basis_.assign(m, 0);
        is_artificial_.assign(num_cols_, false);
        original_m_ = m;
        orig_index_.resize(m);
        for (std::size_t i = 0; i < m; ++i) orig_index_[i] = static_cast<int>(i);

        std::size_t slack_at = num_structural_;
        std::size_t art_at = num_structural_ + slack_count;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& c = constraints[i];
            if (c.coeffs.size() != num_structural_)
                throw PreconditionError("LP constraint width mismatch");
            Rel rel = c.rel;
            Rat rhs = c.rhs;
            Rat sign = 1;
            if (rhs < 0) {
                sign = -1;
                rhs = -rhs;
                if (rel == Rel::LE) rel = Rel::GE;
                else if (rel == Rel::GE) rel = Rel::LE;
            }
            for (std::size_t j = 0; j < num_structural_; ++j) rows_[i][j] = sign * c.coeffs[j];
            rhs_[i] = rhs;
            if (rel == Rel::LE) {
                rows_[i][slack_at] = 1;
                basis_[i] = static_cast<int>(slack_at);
                slack_of_row_.push_back(static_cast<int>(slack_at));
                ++slack_at;
            } else if (rel == Rel::GE) {
                rows_[i][slack_at] = -1;
                slack_of_row_.push_back(static_cast<int>(slack_at));
                ++slack_at;
                rows_[i][art_at] = 1;
                is_artificial_[art_at] = true;
                basis_[i] = static_cast<int>(art_at);
                ++art_at;
            } else {
                slack_of_row_.push_back(-1);
                rows_[i][art_at] = 1;
                is_artificial_[art_at] = true;
                basis_[i] = static_cast<int>(art_at);
                ++art_at;
            }
        }
        has_artificials_ = art_at > num_structural_ + slack_count;
    }

    LpSolution solve() {
        LpSolution out;
        if (has_artificials_) {
            // Phase 1: max -sum(artificials).
            std::vector<Rat> phase1_cost(num_cols_, Rat(0));
            for (std::size_t j = 0; j < num_cols_; ++j)
                if (is_artificial_[j]) phase1_cost[j] = -1;
            build_objective_row(phase1_cost);
            if (!run_simplex(/*allow_artificials=*/true)) {
                out.status = LpSolution::Status::Unbounded;  // cannot happen in phase 1
                return out;
            }
            if (current_objective_value(phase1_cost) != 0) {
                out.status = LpSolution::Status::Infeasible;
                return out;
            }
            purge_artificials();
        }

        std::vector<Rat> cost(num_cols_, Rat(0));
        for (std::size_t j = 0; j < num_structural_; ++j) cost[j] = objective_[j];
        build_objective_row(cost);
        if (!run_simplex(/*allow_artificials=*/false)) {
            out.status = LpSolution::Status::Unbounded;
            return out;
        }
        out.status = LpSolution::Status::Optimal;
        out.x.assign(num_structural_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < num_structural_)
                out.x[basis_[i]] = rhs_[i];
        out.objective = current_objective_value(cost);
        // Duals from slack reduced costs; meaningful when every row carried a +1 slack.
        out.duals.assign(original_m_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (slack_of_row_[i] >= 0) out.duals[orig_index_[i]] = -obj_row_[slack_of_row_[i]];
        return out;
    }

private:
    void build_objective_row(const std::vector<Rat>& cost) {
        obj_row_.assign(num_cols_, Rat(0));
        for (std::size_t j = 0; j < num_cols_; ++j) {
            Rat z = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat& cb = cost[basis_[i]];
                if (cb != 0 && rows_[i][j] != 0) z += cb * rows_[i][j];
            }
            obj_row_[j] = cost[j] - z;  // reduced cost; optimal when all <= 0
        }
    }

    Rat current_objective_value(const std::vector<Rat>& cost) const {
        Rat v = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& cb = cost[basis_[i]];
            if (cb != 0) v += cb * rhs_[i];
        }
        return v;
    }

    // Bland: entering = least index with positive reduced cost; leaving = ratio
    // test, ties by least basic variable index. Returns false on unboundedness.
    bool run_simplex(bool allow_artificials) {
        while (true) {
            int entering = -1;
            for (std::size_t j = 0; j < num_cols_; ++j) {
                if (!allow_artificials && is_artificial_[j]) continue;
                if (obj_row_[j] > 0) {
                    entering = static_cast<int>(j);
                    break;
                }
            }
            if (entering < 0) return true;
            int leaving_row = -1;
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat& a = rows_[i][entering];
                if (a <= 0) continue;
                Rat ratio = rhs_[i] / a;
                if (leaving_row < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving_row])) {
                    leaving_row = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving_row < 0) return false;
            pivot(static_cast<std::size_t>(leaving_row), static_cast<std::size_t>(entering));
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rat inv = rows_[row][col];
        for (auto& v : rows_[row]) v /= inv;
        rhs_[row] /= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            const Rat factor = rows_[i][col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < num_cols_; ++j)
                if (rows_[row][j] != 0) rows_[i][j] -= factor * rows_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        const Rat obj_factor = obj_row_[col];
        if (obj_factor != 0)
            for (std::size_t j = 0; j < num_cols_; ++j)
                if (rows_[row][j] != 0) obj_row_[j] -= obj_factor * rows_[row][j];
        basis_[row] = static_cast<int>(col);
    }

    // After a feasible phase 1 every artificial sits at zero; pivot basic ones
    // onto any usable column, or drop their (redundant) rows.
    void purge_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial_[basis_[i]]) {
                ++i;
                continue;
            }
            std::size_t col = num_cols_;
            for (std::size_t j = 0; j < num_cols_; ++j) {
                if (is_artificial_[j]) continue;
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == num_cols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                slack_of_row_.erase(slack_of_row_.begin() + static_cast<std::ptrdiff_t>(i));
                orig_index_.erase(orig_index_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, col);
                ++i;
            }
        }
    }

    std::size_t num_structural_;
    std::size_t num_cols_ = 0;
    std::vector<Rat> objective_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<Rat> obj_row_;
    std::vector<int> basis_;
    std::vector<int> slack_of_row_;  // -1 for EQ rows
    std::vector<int> orig_index_;    // surviving row -> original constraint index
    std::size_t original_m_ = 0;
    std::vector<bool> is_artificial_;
    bool has_artificials_ = false;
};

}  // namespace

LpSolution solve_lp(const std::vector<LpConstraint>& constraints,
                    const std::vector<Rat>& objective, long long cell_limit) {
    Tableau t(constraints, objective, cell_limit);
    return t.solve();
}

}  // namespace helly
