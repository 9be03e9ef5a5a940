#ifndef AOP_SOLVE_RESULT_HPP
#define AOP_SOLVE_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aop/graph.hpp"

namespace aop {

enum class solve_status { feasible, infeasible, aborted };

inline std::string_view to_string(solve_status s) {
    switch (s) {
        case solve_status::feasible: return "feasible";
        case solve_status::infeasible: return "infeasible";
        case solve_status::aborted: return "aborted";
    }
    return "?";
}

struct solve_stats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
};

struct search_limits {
    std::uint64_t node_budget = 10'000'000;
};

// A feasible result always carries a witness; `reason` says why an
// infeasible instance was rejected and `method` names the procedure used.
struct solve_result {
    solve_status status = solve_status::infeasible;
    std::optional<orientation> witness;
    solve_stats stats;
    std::string reason;
    std::string method;

    bool feasible() const { return status == solve_status::feasible; }
};

inline solve_result infeasible(std::string method, std::string reason) {
    solve_result r;
    r.status = solve_status::infeasible;
    r.method = std::move(method);
    r.reason = std::move(reason);
    return r;
}

}  // namespace aop

#endif  // AOP_SOLVE_RESULT_HPP
