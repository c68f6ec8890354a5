#include "tcrs/dfvs.hpp"

#include "tcrs/errors.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>

namespace tcrs {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

// Branch and bound over vertex masks.
class Solver {
public:
    explicit Solver(const DiGraph& g) : n_(g.vertex_count()), out_(n_), in_(n_)
    {
        for (auto arc : g.arcs()) {
            out_[arc.from] |= bit(arc.to);
            in_[arc.to] |= bit(arc.from);
        }
    }

    // Exact minimum size for the graph induced by `active`, or cap + 1 if it
    // exceeds cap.
    std::size_t minimum(Mask active, std::size_t cap)
    {
        active = prune(active);
        if (active == 0)
            return 0;
        if (auto it = memo_.find(active); it != memo_.end()) {
            auto [value, exact] = it->second;
            if (exact)
                return value <= cap ? value : cap + 1;
            if (value > cap)
                return cap + 1;
        }

        std::size_t result;
        auto components = nontrivial_components(active);
        if (components.size() > 1) {
            std::size_t total = 0;
            for (auto c : components) {
                total += minimum(c, cap - std::min(cap, total));
                if (total > cap)
                    break;
            }
            result = total > cap ? cap + 1 : total;
        } else {
            result = minimum_strong(active, cap);
        }
        remember(active, result, cap);
        return result;
    }

private:
    void remember(Mask active, std::size_t result, std::size_t cap)
    {
        auto& slot = memo_[active];
        if (result <= cap)
            slot = {result, true};
        else if (!slot.second)
            slot = {std::max(slot.first, cap + 1), false};
    }

    // Strips vertices with no in- or out-neighbour inside `active`; they lie
    // on no circuit.
    Mask prune(Mask active) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Mask m = active; m; m &= m - 1) {
                auto v = static_cast<Vertex>(std::countr_zero(m));
                if ((out_[v] & active) == 0 || (in_[v] & active) == 0) {
                    active &= ~bit(v);
                    changed = true;
                }
            }
        }
        return active;
    }

    Mask closure(Vertex start, Mask active, const std::vector<Mask>& adj) const
    {
        Mask seen = bit(start), frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1)
                next |= adj[std::countr_zero(m)];
            next &= active & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    std::vector<Mask> nontrivial_components(Mask active) const
    {
        std::vector<Mask> result;
        Mask rest = active;
        while (rest) {
            auto v = static_cast<Vertex>(std::countr_zero(rest));
            Mask scc = closure(v, active, out_) & closure(v, active, in_);
            rest &= ~scc;
            if (std::popcount(scc) >= 2)
                result.push_back(scc);
        }
        return result;
    }

    // Vertices of a shortest circuit inside `active` (0 if acyclic).
    Mask shortest_circuit(Mask active) const
    {
        Mask best = 0;
        int best_length = 65;
        std::vector<int> parent(n_);
        for (Mask m = active; m; m &= m - 1) {
            auto root = static_cast<Vertex>(std::countr_zero(m));
            // BFS from root until an arc back into root closes a circuit.
            Mask seen = bit(root), frontier = seen;
            parent[root] = -1;
            int depth = 0;
            Vertex closing = root;
            bool found = false;
            while (frontier && !found && depth + 1 < best_length) {
                ++depth;
                for (Mask f = frontier; f && !found; f &= f - 1) {
                    auto v = static_cast<Vertex>(std::countr_zero(f));
                    if (out_[v] & bit(root)) {
                        closing = v;
                        found = true;
                    }
                }
                if (found)
                    break;
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1) {
                    auto v = static_cast<Vertex>(std::countr_zero(f));
                    Mask fresh = out_[v] & active & ~seen & ~next;
                    for (Mask x = fresh; x; x &= x - 1)
                        parent[std::countr_zero(x)] = static_cast<int>(v);
                    next |= fresh;
                }
                seen |= next;
                frontier = next;
            }
            if (found && depth < best_length) {
                best_length = depth;
                best = 0;
                for (int v = static_cast<int>(closing); v >= 0; v = parent[v])
                    best |= bit(static_cast<Vertex>(v));
            }
        }
        return best;
    }

    // Greedy packing of vertex-disjoint circuits.
    std::size_t packing_bound(Mask active) const
    {
        std::size_t count = 0;
        for (Mask rest = prune(active); rest; rest = prune(rest)) {
            Mask c = shortest_circuit(rest);
            if (c == 0)
                break;
            ++count;
            rest &= ~c;
        }
        return count;
    }

    std::size_t minimum_strong(Mask active, std::size_t cap)
    {
        if (cap == 0)
            return 1;
        auto lower = std::max<std::size_t>(1, packing_bound(active));
        for (std::size_t k = lower; k <= cap; ++k)
            if (decide(active, k))
                return k;
        return cap + 1;
    }

    bool decide(Mask active, std::size_t k)
    {
        Mask circuit = shortest_circuit(active);
        for (Mask m = circuit; m; m &= m - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(m));
            if (minimum(active & ~bit(v), k - 1) <= k - 1)
                return true;
        }
        return false;
    }

    std::size_t n_;
    std::vector<Mask> out_;
    std::vector<Mask> in_;
    std::unordered_map<Mask, std::pair<std::size_t, bool>> memo_;
};

} // namespace

bool is_dfvs(const DiGraph& g, std::span<const Vertex> s)
{
    std::vector<std::uint8_t> removed(g.vertex_count(), 0);
    for (auto v : s) {
        if (v >= g.vertex_count())
            throw UnknownVertex("vertex index " + std::to_string(v) + " not in graph");
        removed[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!removed[v])
            keep.push_back(v);
    try {
        topological_order(induced_subgraph(g, keep));
        return true;
    } catch (const CyclicError&) {
        return false;
    }
}

DfvsResult min_dfvs(const DiGraph& g)
{
    auto n = g.vertex_count();
    if (n > 64)
        throw TooLarge("min_dfvs supports at most 64 vertices");
    Solver solver(g);
    Mask all = n == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n)) - 1;
    auto f = solver.minimum(all, n);
    assert(f <= n);
    if (n > 0 && f > n - 1)
        throw InternalError("feedback vertex set larger than n - 1");

    // Smallest admissible vertex first yields the lexicographically smallest
    // minimum set.
    DfvsResult result;
    Mask chosen = 0;
    Vertex next = 0;
    while (result.size() < f) {
        auto remaining = f - result.size() - 1;
        bool placed = false;
        for (Vertex v = next; v < n; ++v) {
            if (solver.minimum(all & ~chosen & ~bit(v), remaining) <= remaining) {
                chosen |= bit(v);
                result.vertices.push_back(v);
                next = v + 1;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw InternalError("min_dfvs failed to reconstruct a minimum set");
    }
    return result;
}

namespace detail {

DfvsResult min_dfvs_by_enumeration(const DiGraph& g)
{
    auto n = g.vertex_count();
    if (n > 20)
        throw TooLarge("subset enumeration supports at most 20 vertices");
    for (std::size_t k = 0; k <= n; ++k) {
        // Combinations of size k in lexicographic order.
        std::vector<Vertex> pick(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = static_cast<Vertex>(i);
        while (true) {
            if (is_dfvs(g, pick))
                return {pick};
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (auto j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw InternalError("unreachable: full vertex set is always a DFVS");
}

} // namespace detail

} // namespace tcrs
