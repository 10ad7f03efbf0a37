#include "qaoaws/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "qaoaws/errors.hpp"

namespace qaoaws {

std::int64_t Graph::total_weight() const {
    std::int64_t sum = 0;
    for (const auto& e : edges) {
        sum += e.weight;
    }
    return sum;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

std::int64_t parse_int(std::string_view token, int line_no, const char* what) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(std::string("malformed ") + what + " '" + std::string(token) + "'",
                         line_no);
    }
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::set<std::pair<int, int>> seen;
    int max_index = -1;
    bool have_header = false;
    int header_n = 0;
    bool first_significant = true;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }

        if (first_significant && tokens[0] == "n") {
            if (tokens.size() != 2) {
                throw ParseError("vertex-count header must be 'n <count>'", line_no);
            }
            const std::int64_t n = parse_int(tokens[1], line_no, "vertex count");
            if (n < 1) {
                throw ParseError("vertex count must be at least 1", line_no);
            }
            have_header = true;
            header_n = static_cast<int>(n);
            first_significant = false;
            continue;
        }
        first_significant = false;

        if (tokens.size() != 2 && tokens.size() != 3) {
            throw ParseError("expected 'u v' or 'u v w'", line_no);
        }
        const std::int64_t u = parse_int(tokens[0], line_no, "vertex index");
        const std::int64_t v = parse_int(tokens[1], line_no, "vertex index");
        const std::int64_t w = tokens.size() == 3 ? parse_int(tokens[2], line_no, "edge weight") : 1;
        if (u < 0 || v < 0) {
            throw ParseError("negative vertex index", line_no);
        }
        if (u == v) {
            throw ParseError("self-loop " + std::to_string(u) + "-" + std::to_string(v), line_no);
        }
        if (w < 1) {
            throw ParseError("edge weight must be a positive integer", line_no);
        }
        const std::pair<int, int> key = std::minmax(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(key).second) {
            throw ParseError("duplicate edge " + std::to_string(key.first) + "-" +
                                 std::to_string(key.second),
                             line_no);
        }
        g.edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), w});
        max_index = std::max({max_index, static_cast<int>(u), static_cast<int>(v)});
    }

    if (have_header) {
        if (max_index >= header_n) {
            throw ParseError("vertex index " + std::to_string(max_index) +
                             " exceeds declared count " + std::to_string(header_n));
        }
        g.num_vertices = header_n;
    } else {
        if (max_index < 0) {
            throw ParseError("no edges and no vertex-count header");
        }
        g.num_vertices = max_index + 1;
    }
    return g;
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open graph file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

} // namespace qaoaws
