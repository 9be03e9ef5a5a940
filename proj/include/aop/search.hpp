#ifndef AOP_SEARCH_HPP
#define AOP_SEARCH_HPP

// Complete backtracking search for acyclic T-odd orientations.
//
// Two propagation rules run to fixpoint after every assignment:
//   parity forcing: a scoped vertex with one open edge left gets that edge
//     directed so its final in-degree parity matches its T membership;
//   cycle forcing: after adding u->v, every open edge {x, y} with x reaching
//     u and v reaching y must become x->y, since y->x would close a cycle.
// Branching picks the open edge whose endpoints have the fewest open edges
// (ties: lowest link id) and tries the direction toward the lower vertex id
// first. Forced assignments are implied by the branch, so counting leaves
// counts solutions exactly.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aop/acyclicity.hpp"
#include "aop/graph.hpp"
#include "aop/solve_result.hpp"

namespace aop {

struct count_result {
    bool complete = false;
    std::uint64_t count = 0;
    solve_stats stats;
};

namespace detail {

class parity_search {
public:
    parity_search(const orientation_problem& p, std::span<const vertex_id> scope, search_limits limits)
        : p_(p), g_(p.graph()), limits_(limits), in_scope_(vertex_mask(g_.vertex_count(), scope)) {
        const auto n = g_.vertex_count();
        dir_.assign(g_.edge_count(), open);
        open_.assign(n, 0);
        parity_.assign(n, 0);
        out_.assign(n, {});
        in_.assign(n, {});
        mark_.assign(n, 0);
        for (link_id l = 0; l < g_.edge_count(); ++l) {
            ++open_[g_.edges()[l].first];
            ++open_[g_.edges()[l].second];
        }
        for (const auto& a : g_.arcs()) {
            out_[a.tail].push_back(a.head);
            in_[a.head].push_back(a.tail);
            parity_[a.head] ^= 1;
        }
        fixed_acyclic_ = is_acyclic(n, g_.arcs()).acyclic;
    }

    solve_result first() {
        mode_ = mode::first;
        solve_result r;
        r.method = "search";
        bool found = fixed_acyclic_ && start() && search();
        r.stats = stats_;
        if (aborted_) {
            r.status = solve_status::aborted;
            r.reason = "node budget exhausted";
        } else if (found) {
            r.status = solve_status::feasible;
            r.witness = solution_;
        } else {
            r.status = solve_status::infeasible;
            r.reason = fixed_acyclic_ ? "search exhausted" : "fixed arcs contain a cycle";
        }
        return r;
    }

    count_result count() {
        mode_ = mode::count;
        if (fixed_acyclic_ && start()) search();
        return {!aborted_, solutions_, stats_};
    }

private:
    static constexpr std::int8_t open = -1;
    enum class mode { first, count };

    bool start() {
        for (vertex_id v = 0; v < g_.vertex_count(); ++v) vertex_queue_.push_back(v);
        for (const auto& a : g_.arcs()) arc_queue_.push_back(a);
        return true;
    }

    bool search() {
        if (stats_.decisions > limits_.node_budget) {
            aborted_ = true;
            return false;
        }
        if (!propagate()) {
            ++stats_.conflicts;
            return false;
        }
        auto branch = pick();
        if (!branch) {
            if (mode_ == mode::first) {
                solution_ = current();
                return true;
            }
            ++solutions_;
            return false;
        }
        // forward == false points the edge at its lower endpoint
        for (bool forward : {false, true}) {
            std::size_t level = trail_.size();
            ++stats_.decisions;
            if (assign(*branch, forward) && search()) return true;
            undo(level);
            if (aborted_) return false;
        }
        return false;
    }

    std::optional<link_id> pick() const {
        std::optional<link_id> best;
        std::size_t best_score = 0;
        for (link_id l = 0; l < g_.edge_count(); ++l) {
            if (dir_[l] != open) continue;
            const auto& e = g_.edges()[l];
            std::size_t score = open_[e.first] + open_[e.second];
            if (!best || score < best_score) {
                best = l;
                best_score = score;
            }
        }
        return best;
    }

    orientation current() const {
        orientation o{std::vector<bool>(g_.edge_count())};
        for (link_id l = 0; l < g_.edge_count(); ++l) o.forward[l] = dir_[l] == 1;
        return o;
    }

    bool reaches(vertex_id from, vertex_id to) {
        ++epoch_;
        stack_.clear();
        stack_.push_back(from);
        mark_[from] = epoch_;
        while (!stack_.empty()) {
            vertex_id v = stack_.back();
            stack_.pop_back();
            if (v == to) return true;
            for (vertex_id w : out_[v]) {
                if (mark_[w] != epoch_) {
                    mark_[w] = epoch_;
                    stack_.push_back(w);
                }
            }
        }
        return false;
    }

    bool assign(link_id l, bool forward) {
        const auto& e = g_.edges()[l];
        arc a = forward ? arc{e.first, e.second} : arc{e.second, e.first};
        if (reaches(a.head, a.tail)) {
            clear_queues();
            return false;
        }
        dir_[l] = forward ? 1 : 0;
        trail_.push_back(l);
        --open_[e.first];
        --open_[e.second];
        parity_[a.head] ^= 1;
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
        vertex_queue_.push_back(a.tail);
        vertex_queue_.push_back(a.head);
        arc_queue_.push_back(a);
        return true;
    }

    void undo(std::size_t level) {
        while (trail_.size() > level) {
            link_id l = trail_.back();
            trail_.pop_back();
            const auto& e = g_.edges()[l];
            arc a = dir_[l] == 1 ? arc{e.first, e.second} : arc{e.second, e.first};
            dir_[l] = open;
            ++open_[e.first];
            ++open_[e.second];
            parity_[a.head] ^= 1;
            out_[a.tail].pop_back();
            in_[a.head].pop_back();
        }
        clear_queues();
    }

    void clear_queues() {
        vertex_queue_.clear();
        arc_queue_.clear();
    }

    bool force(link_id l, bool forward) {
        ++stats_.propagations;
        return assign(l, forward);
    }

    bool propagate() {
        while (!vertex_queue_.empty() || !arc_queue_.empty()) {
            if (!vertex_queue_.empty()) {
                vertex_id v = vertex_queue_.back();
                vertex_queue_.pop_back();
                if (!in_scope_[v] || open_[v] > 1) continue;
                bool needs_in = (parity_[v] == 1) != p_.is_odd(v);
                if (open_[v] == 0) {
                    if (needs_in) return false;
                    continue;
                }
                for (link_id l : g_.incident(v)) {
                    if (!g_.is_edge(l) || dir_[l] != open) continue;
                    bool into_second = g_.edges()[l].second == v;
                    if (!force(l, needs_in == into_second)) return false;
                    break;
                }
                continue;
            }
            arc a = arc_queue_.back();
            arc_queue_.pop_back();
            if (!force_acyclic(a)) return false;
        }
        return true;
    }

    // Open edges between ancestors of a.tail and descendants of a.head.
    bool force_acyclic(arc a) {
        collect(a.head, out_, descendants_);
        ++desc_epoch_;
        for (vertex_id v : descendants_) desc_mark_[v] = desc_epoch_;
        collect(a.tail, in_, ancestors_);
        for (vertex_id x : ancestors_) {
            for (link_id l : g_.incident(x)) {
                if (!g_.is_edge(l) || dir_[l] != open) continue;
                if (desc_mark_[g_.other(l, x)] != desc_epoch_) continue;
                if (!force(l, g_.edges()[l].first == x)) return false;
            }
        }
        return true;
    }

    void collect(vertex_id from, const std::vector<std::vector<vertex_id>>& adjacency,
                 std::vector<vertex_id>& out) {
        ++walk_epoch_;
        out.clear();
        out.push_back(from);
        walk_mark_[from] = walk_epoch_;
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (vertex_id w : adjacency[out[i]]) {
                if (walk_mark_[w] != walk_epoch_) {
                    walk_mark_[w] = walk_epoch_;
                    out.push_back(w);
                }
            }
        }
    }

    const orientation_problem& p_;
    const partially_directed_graph& g_;
    search_limits limits_;
    std::vector<bool> in_scope_;
    mode mode_ = mode::first;

    std::vector<std::int8_t> dir_;
    std::vector<std::uint32_t> open_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::vector<vertex_id>> out_, in_;
    std::vector<link_id> trail_;
    std::vector<vertex_id> vertex_queue_;
    std::vector<arc> arc_queue_;

    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::vector<vertex_id> stack_;

    std::vector<std::uint32_t> walk_mark_ = std::vector<std::uint32_t>(g_.vertex_count(), 0);
    std::uint32_t walk_epoch_ = 0;
    std::vector<std::uint32_t> desc_mark_ = std::vector<std::uint32_t>(g_.vertex_count(), 0);
    std::uint32_t desc_epoch_ = 0;
    std::vector<vertex_id> descendants_, ancestors_;

    bool fixed_acyclic_ = true;
    bool aborted_ = false;
    std::uint64_t solutions_ = 0;
    orientation solution_;
    solve_stats stats_;
};

}  // namespace detail

inline solve_result solve_exact(const orientation_problem& p, search_limits limits = {}) {
    auto scope = all_vertices(p.graph().vertex_count());
    return detail::parity_search(p, scope, limits).first();
}

// Number of acyclic orientations that are T-odd on `scope`.
inline count_result count_exact(const orientation_problem& p, std::span<const vertex_id> scope,
                                search_limits limits = {}) {
    return detail::parity_search(p, scope, limits).count();
}

}  // namespace aop

#endif  // AOP_SEARCH_HPP
