#include "tcrs/oracles.hpp"

#include "tcrs/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <unordered_map>

namespace tcrs {

std::size_t default_max_k_crs(std::size_t n)
{
    if (n <= 1)
        return 0;
    if (n == 2)
        return 1;
    if (n == 3)
        return 3;
    return 2 * n - 4;
}

std::size_t default_max_k_dcrs(std::size_t n)
{
    return n == 0 ? 0 : 2 * n - 2;
}

namespace {

constexpr std::size_t max_search_vertices = 8;

struct StateKey {
    std::uint64_t reach;
    std::uint64_t use_lo;
    std::uint64_t use_hi;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const
    {
        std::uint64_t h = k.reach * 0x9E3779B97F4A7C15ull;
        h ^= (k.use_lo + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
        h ^= (k.use_hi + 0x94D049BB133111EBull) * 0x165667B19E3779F9ull;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Iterative deepening over sequences of endpoint pairs. reach[v] is the set
// of sources with a journey to v using the edges placed so far; edge i is
// given time i + 1, so each new edge only extends journeys that ended
// strictly earlier.
class SequenceSearch {
public:
    SequenceSearch(const DiGraph& r, bool directed, bool allow_multi) :
        n_(r.vertex_count()), directed_(directed), cap_(allow_multi ? 2 : 1)
    {
        if (n_ > max_search_vertices)
            throw TooLarge("exhaustive temporal search supports at most 8 vertices");
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = directed ? 0 : u + 1; v < n_; ++v)
                if (u != v)
                    pairs_.push_back({u, v});
        need_.fill(0);
        for (auto arc : r.arcs())
            need_[arc.to] |= static_cast<std::uint8_t>(1u << arc.from);
    }

    bool run(std::size_t k)
    {
        std::array<std::uint8_t, max_search_vertices> reach{};
        for (Vertex v = 0; v < n_; ++v)
            reach[v] = static_cast<std::uint8_t>(1u << v);
        sequence_.clear();
        return dfs(reach, 0, 0, k);
    }

    const std::vector<Arc>& sequence() const { return sequence_; }

private:
    using Reach = std::array<std::uint8_t, max_search_vertices>;

    std::size_t unsatisfied(const Reach& reach) const
    {
        std::size_t count = 0;
        for (Vertex v = 0; v < n_; ++v)
            if ((reach[v] & need_[v]) != need_[v])
                ++count;
        return count;
    }

    static std::uint64_t pack(const Reach& reach)
    {
        std::uint64_t out;
        std::memcpy(&out, reach.data(), sizeof out);
        return out;
    }

    bool dfs(const Reach& reach, std::uint64_t lo, std::uint64_t hi, std::size_t remaining)
    {
        auto open = unsatisfied(reach);
        if (open == 0)
            return true;
        // A directed arc fixes at most one target, an edge at most two.
        auto lower = directed_ ? open : (open + 1) / 2;
        if (lower > remaining)
            return false;
        StateKey key{pack(reach), lo, hi};
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= remaining)
            return false;

        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            auto shift = 2 * (p % 32);
            auto& word = p < 32 ? lo : hi;
            if (((word >> shift) & 3u) >= cap_)
                continue;
            auto [u, v] = pairs_[p];
            Reach next = reach;
            if (directed_) {
                next[v] |= reach[u];
            } else {
                next[u] |= reach[v];
                next[v] |= reach[u];
            }
            if (next == reach)
                continue; // an edge that changes nothing is never needed
            word += std::uint64_t{1} << shift;
            sequence_.push_back(pairs_[p]);
            bool found = dfs(next, lo, hi, remaining - 1);
            word -= std::uint64_t{1} << shift;
            if (found)
                return true;
            sequence_.pop_back();
        }
        auto& slot = failed_[key];
        slot = std::max<std::size_t>(slot, remaining);
        return false;
    }

    std::size_t n_;
    bool directed_;
    unsigned cap_;
    std::vector<Arc> pairs_;
    std::array<std::uint8_t, max_search_vertices> need_{};
    std::vector<Arc> sequence_;
    std::unordered_map<StateKey, std::size_t, StateKeyHash> failed_;
};

OracleResult brute_min(const DiGraph& r, const OracleConfig& config, Orientation orientation)
{
    auto n = r.vertex_count();
    bool directed = orientation == Orientation::directed;
    auto max_k = config.max_k.value_or(directed ? default_max_k_dcrs(n) : default_max_k_crs(n));
    SequenceSearch search(r, directed, config.allow_multi);
    auto lower = n - connected_components(r).size();
    for (auto k = lower; k <= max_k; ++k) {
        if (!search.run(k))
            continue;
        TemporalGraph witness(r.labels(), orientation);
        Time t = 1;
        for (auto arc : search.sequence())
            witness.add(arc.from, arc.to, t++);
        return {true, search.sequence().size(), std::move(witness)};
    }
    return {false, max_k, std::nullopt};
}

VertexMask closure(VertexMask start, VertexMask within, const std::vector<VertexMask>& adj)
{
    VertexMask seen = start, frontier = start;
    while (frontier) {
        VertexMask next = 0;
        for (auto m = frontier; m; m &= m - 1)
            next |= adj[std::countr_zero(m)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

} // namespace

OracleResult brute_min_crs(const DiGraph& r, const OracleConfig& config)
{
    return brute_min(r, config, Orientation::undirected);
}

OracleResult brute_min_dcrs(const DiGraph& r, const OracleConfig& config)
{
    return brute_min(r, config, Orientation::directed);
}

ClosedWalkFamily closed_walk_family(const DiGraph& r)
{
    auto n = r.vertex_count();
    if (n > 20)
        throw TooLarge("closed walk enumeration supports at most 20 vertices");
    std::vector<VertexMask> out(n, 0), in(n, 0);
    for (auto arc : r.arcs()) {
        out[arc.from] |= VertexMask{1} << arc.to;
        in[arc.to] |= VertexMask{1} << arc.from;
    }
    ClosedWalkFamily family{n, {}};
    VertexMask end = VertexMask{1} << n;
    for (VertexMask s = 1; s < end; ++s) {
        if (std::popcount(s) < 2)
            continue;
        VertexMask root = s & (~s + 1);
        if (closure(root, s, out) == s && closure(root, s, in) == s)
            family.sets.push_back(s);
    }
    return family;
}

bool family_walk_through(const ClosedWalkFamily& family, Vertex a, Vertex b, Vertex excluded)
{
    VertexMask want = (VertexMask{1} << a) | (VertexMask{1} << b);
    VertexMask avoid = VertexMask{1} << excluded;
    return std::any_of(family.sets.begin(), family.sets.end(),
                       [&](VertexMask s) { return (s & want) == want && (s & avoid) == 0; });
}

bool helly_by_triples(const ClosedWalkFamily& family)
{
    auto n = family.vertex_count;
    VertexMask everything = n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                VertexMask triple = (VertexMask{1} << a) | (VertexMask{1} << b) | (VertexMask{1} << c);
                VertexMask common = everything;
                for (auto s : family.sets)
                    if (std::popcount(s & triple) >= 2)
                        common &= s;
                if (common == 0)
                    return false;
            }
    return true;
}

namespace {

// Extends a pairwise intersecting subfamily. Only sets that strictly shrink
// the running intersection are tried: in a minimal violating subfamily every
// member does, whatever the order (otherwise dropping it would leave the
// intersection empty).
bool find_violation(const std::vector<VertexMask>& sets, std::vector<VertexMask>& chosen, VertexMask common,
                    std::size_t from)
{
    for (auto i = from; i < sets.size(); ++i) {
        auto s = sets[i];
        if ((s & common) == common)
            continue;
        if (!std::all_of(chosen.begin(), chosen.end(), [&](VertexMask c) { return (c & s) != 0; }))
            continue;
        if ((s & common) == 0)
            return true;
        chosen.push_back(s);
        if (find_violation(sets, chosen, s & common, i + 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool helly_by_subfamilies(const ClosedWalkFamily& family)
{
    std::vector<VertexMask> chosen;
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        chosen.assign(1, family.sets[i]);
        if (find_violation(family.sets, chosen, family.sets[i], i + 1))
            return false;
    }
    return true;
}

bool brute_walk_helly(const DiGraph& r)
{
    return helly_by_triples(closed_walk_family(r));
}

std::vector<Edge> prufer_decode(std::span<const Vertex> code, std::size_t n)
{
    std::vector<std::size_t> degree(n, 1);
    for (auto v : code)
        ++degree[v];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (auto v : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.push_back(Edge::make(leaf, v));
        --degree[leaf];
        --degree[v];
    }
    Vertex a = 0;
    while (degree[a] != 1)
        ++a;
    Vertex b = a + 1;
    while (degree[b] != 1)
        ++b;
    edges.push_back(Edge::make(a, b));
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::optional<std::vector<Edge>> find_host_tree(const ClosedWalkFamily& family)
{
    auto n = family.vertex_count;
    if (n > 10)
        throw TooLarge("host tree enumeration supports at most 10 vertices");
    if (n <= 1)
        return std::vector<Edge>{};

    auto hosts = [&](const std::vector<Edge>& edges) {
        for (auto s : family.sets) {
            int inside = 0;
            for (auto e : edges)
                if ((s >> e.u & 1u) && (s >> e.v & 1u))
                    ++inside;
            if (inside != std::popcount(s) - 1)
                return false;
        }
        return true;
    };

    std::vector<Vertex> code(n - 2, 0);
    while (true) {
        auto edges = prufer_decode(code, n);
        if (hosts(edges))
            return edges;
        std::size_t i = code.size();
        while (i > 0 && code[i - 1] == n - 1)
            code[--i] = 0;
        if (i == 0)
            return std::nullopt;
        ++code[i - 1];
    }
}

std::optional<Tree> brute_tree_representation(const DiGraph& r)
{
    auto edges = find_host_tree(closed_walk_family(r));
    if (!edges)
        return std::nullopt;
    return Tree(r.labels(), std::move(*edges));
}

} // namespace tcrs
