#ifndef AOP_DECIDE_HPP
#define AOP_DECIDE_HPP

#include "aop/graph.hpp"
#include "aop/search.hpp"
#include "aop/solve_result.hpp"
#include "aop/special.hpp"

namespace aop {

// Parity gate, then the cheapest applicable procedure.
inline solve_result decide(const orientation_problem& p, search_limits limits = {}) {
    if (!parity_feasible(p)) return infeasible("parity", "parity: |E| + |A| + |T| is odd");
    if (is_forest(p.graph())) return solve_tree(p);
    if (p.graph().max_degree() <= 2) return solve_degree_two(p);
    return solve_exact(p, limits);
}

}  // namespace aop

#endif  // AOP_DECIDE_HPP
