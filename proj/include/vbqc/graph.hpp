#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vbqc {

// The three built-in 4-qubit layouts share one edge set: the path
// 1-2-3-4 (0-based (0,1),(1,2),(2,3)). The figures bend the same path
// into a line, a horseshoe and a zigzag; the tag records which role a
// graph plays (trap preparation at end vs. middle vertices, Bell-test
// wiring), the physics is carried by the edges.
enum class Layout { Linear4, Horseshoe4, Zigzag4, Custom };

std::string layout_name(Layout l);
Layout layout_from_name(const std::string& s);

struct ClusterGraph {
    Layout layout = Layout::Custom;
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    static ClusterGraph linear4();
    static ClusterGraph horseshoe4();
    static ClusterGraph zigzag4();
    static ClusterGraph custom(int num_vertices, std::vector<std::pair<int, int>> edges);

    void validate() const;
    bool operator==(const ClusterGraph& o) const {
        return num_vertices == o.num_vertices && edges == o.edges;
    }
};

}  // namespace vbqc
