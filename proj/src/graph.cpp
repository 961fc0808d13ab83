#include "vbqc/graph.hpp"

namespace vbqc {

std::string layout_name(Layout l) {
    switch (l) {
        case Layout::Linear4: return "linear4";
        case Layout::Horseshoe4: return "horseshoe4";
        case Layout::Zigzag4: return "zigzag4";
        case Layout::Custom: return "custom";
    }
    return "custom";
}

Layout layout_from_name(const std::string& s) {
    if (s == "linear4") return Layout::Linear4;
    if (s == "horseshoe4") return Layout::Horseshoe4;
    if (s == "zigzag4") return Layout::Zigzag4;
    if (s == "custom") return Layout::Custom;
    throw std::invalid_argument("unknown layout: " + s);
}

namespace {
ClusterGraph path4(Layout tag) {
    ClusterGraph g;
    g.layout = tag;
    g.num_vertices = 4;
    g.edges = {{0, 1}, {1, 2}, {2, 3}};
    return g;
}
}  // namespace

ClusterGraph ClusterGraph::linear4() { return path4(Layout::Linear4); }
ClusterGraph ClusterGraph::horseshoe4() { return path4(Layout::Horseshoe4); }
ClusterGraph ClusterGraph::zigzag4() { return path4(Layout::Zigzag4); }

ClusterGraph ClusterGraph::custom(int num_vertices, std::vector<std::pair<int, int>> edges) {
    ClusterGraph g;
    g.layout = Layout::Custom;
    g.num_vertices = num_vertices;
    g.edges = std::move(edges);
    g.validate();
    return g;
}

void ClusterGraph::validate() const {
    if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop in cluster graph");
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
    }
}

}  // namespace vbqc
