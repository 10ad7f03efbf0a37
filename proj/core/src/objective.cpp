#include "qaoaws/objective.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qaoaws/errors.hpp"

namespace qaoaws {

Objective Objective::from_values(int num_bits, std::vector<std::int64_t> values) {
    if (num_bits < 1) {
        throw InvalidInputError("objective needs at least one bit");
    }
    if (num_bits > kMaxBruteForceQubits) {
        throw SizeGuardError("objective tables capped at " +
                             std::to_string(kMaxBruteForceQubits) + " bits, got " +
                             std::to_string(num_bits));
    }
    const std::size_t dim = std::size_t{1} << num_bits;
    if (values.size() != dim) {
        throw InvalidInputError("objective table must have 2^n entries");
    }

    Objective obj;
    obj.num_bits = num_bits;
    obj.values = std::move(values);
    obj.c_max = 0;
    double sum = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        const std::int64_t c = obj.values[x];
        if (c < 0) {
            throw InvalidInputError("objective values must be non-negative");
        }
        sum += static_cast<double>(c);
        if (c > obj.c_max) {
            obj.c_max = c;
            obj.maximizers.clear();
        }
        if (c == obj.c_max) {
            obj.maximizers.push_back(x);
        }
    }
    if (obj.c_max == 0) {
        throw InvalidInputError("objective is identically zero");
    }
    obj.c_avg = sum / static_cast<double>(dim);
    return obj;
}

Objective maxcut_objective(const Graph& g) {
    if (g.num_vertices < 1) {
        throw InvalidInputError("graph has no vertices");
    }
    if (g.num_vertices > kMaxBruteForceQubits) {
        throw SizeGuardError("brute force refused beyond " +
                             std::to_string(kMaxBruteForceQubits) + " vertices, got " +
                             std::to_string(g.num_vertices));
    }
    if (g.edges.empty()) {
        throw InvalidInputError("MAX-CUT objective of an edgeless graph is identically zero");
    }
    const std::size_t dim = std::size_t{1} << g.num_vertices;
    std::vector<std::int64_t> values(dim, 0);
    for (const auto& e : g.edges) {
        const std::uint64_t bu = std::uint64_t{1} << e.u;
        const std::uint64_t bv = std::uint64_t{1} << e.v;
        for (std::uint64_t x = 0; x < dim; ++x) {
            if (((x & bu) != 0) != ((x & bv) != 0)) {
                values[x] += e.weight;
            }
        }
    }
    return Objective::from_values(g.num_vertices, std::move(values));
}

Objective toy_objective() {
    return Objective::from_values(1, {0, 1});
}

Objective parse_objective_table(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
        throw ParseError("objective table must be {\"n\": int, \"values\": [...]}");
    }
    if (!doc["n"].is_number_integer()) {
        throw ParseError("objective table field 'n' must be an integer");
    }
    const int n = doc["n"].get<int>();
    if (!doc["values"].is_array()) {
        throw ParseError("objective table field 'values' must be an array");
    }
    std::vector<std::int64_t> values;
    values.reserve(doc["values"].size());
    for (const auto& v : doc["values"]) {
        if (!v.is_number_integer()) {
            throw ParseError("objective values must be integers (non-integer costs are refused)");
        }
        values.push_back(v.get<std::int64_t>());
    }
    return Objective::from_values(n, std::move(values));
}

Objective load_objective_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open objective table '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_objective_table(buffer.str());
}

std::span<const std::int64_t> cost_diagonal(const Objective& obj) {
    return obj.values;
}

} // namespace qaoaws
