#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace qaoaws {

struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 1;
};

/// Simple undirected graph with positive integer edge weights.
struct Graph {
    int num_vertices = 0;
    std::vector<Edge> edges;

    std::int64_t total_weight() const;
};

/// Parses the edge-list format:
///   - one edge per line, "u v" or "u v w" (w a positive integer, default 1)
///   - '#' starts a comment, anywhere on a line
///   - optional first line "n <count>" fixes the vertex count; otherwise the
///     count is 1 + the largest vertex index seen
/// Self-loops, duplicate unordered pairs, non-positive weights and malformed
/// lines are rejected with the offending line number.
Graph parse_graph(std::string_view text);

Graph load_graph(const std::filesystem::path& path);

} // namespace qaoaws
