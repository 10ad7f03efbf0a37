#include "qaoaws/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace qaoaws {

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto result =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, result.ptr);
}

CsvWriter& CsvWriter::cell(std::string_view text) {
    if (row_open_) {
        out_ << ',';
    }
    row_open_ = true;
    const bool needs_quotes =
        text.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        out_ << text;
        return *this;
    }
    out_ << '"';
    for (char c : text) {
        if (c == '"') {
            out_ << '"';
        }
        out_ << c;
    }
    out_ << '"';
    return *this;
}

void CsvWriter::end_row() {
    out_ << '\n';
    row_open_ = false;
}

} // namespace qaoaws
