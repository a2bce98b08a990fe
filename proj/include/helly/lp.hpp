#pragma once

#include "helly/rational.hpp"

#include <vector>

namespace helly {

enum class Rel { LE, GE, EQ };

struct LpConstraint {
    std::vector<Rat> coeffs;
    Rel rel = Rel::LE;
    Rat rhs = 0;
};

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat objective = 0;
    std::vector<Rat> x;
    // Dual multipliers per constraint; populated only when every row is LE.
    std::vector<Rat> duals;
};

// Exact rational two-phase primal simplex with Bland's rule over
// max objective . x  subject to  constraints, x >= 0.
// Deterministic and cycle-free; all arithmetic exact.
LpSolution solve_lp(const std::vector<LpConstraint>& constraints,
                    const std::vector<Rat>& objective,
                    long long cell_limit = 4'000'000);

}  // namespace helly
