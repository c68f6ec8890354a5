#include "tcrs/gossip.hpp"

#include <string>

namespace tcrs {

TemporalGraph gossip_graph(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(std::to_string(i));
    TemporalGraph g(std::move(names), Orientation::undirected);
    auto link = [&](std::size_t a, std::size_t b, std::size_t t) {
        g.add(std::to_string(a), std::to_string(b), static_cast<Time>(t));
    };

    if (n == 2) {
        link(1, 2, 1);
    } else if (n == 3) {
        link(1, 2, 1);
        link(2, 3, 2);
        link(3, 1, 3);
    } else if (n >= 4) {
        std::size_t chain = n - 4;
        std::size_t hub = n - 3, junction = n - 2, low = n - 1, far = n;
        for (std::size_t i = 1; i < chain; ++i)
            link(i, i + 1, i);
        if (chain > 0)
            link(chain, junction, chain);
        link(junction, hub, n - 3);
        link(far, low, n - 2);
        link(junction, low, n - 1);
        link(hub, far, n);
        for (std::size_t i = 0; i < chain; ++i)
            link(hub, chain - i, n + 1 + i);
    }
    return g;
}

} // namespace tcrs
