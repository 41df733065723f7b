#pragma once

#include "reconf/graph.hpp"

#include <initializer_list>
#include <vector>

inline reconf::Graph make_graph(int n, std::initializer_list<reconf::Edge> edges) {
    std::vector<reconf::Edge> e(edges);
    return reconf::Graph(n, e);
}

inline reconf::Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline reconf::Graph path(int n) {
    std::vector<reconf::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return reconf::Graph(n, e);
}
inline reconf::Graph complete(int n) {
    std::vector<reconf::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return reconf::Graph(n, e);
}
