#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qaoaws {

/// Doubles rendered with 12 significant digits, locale-independent
/// (std::to_chars); infinities print as "inf"/"-inf".
std::string format_double(double value);

/// RFC-4180-style CSV: fields containing comma, quote, CR or LF are quoted
/// and embedded quotes doubled. Rows end in '\n'.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    CsvWriter& cell(std::string_view text);
    CsvWriter& cell(const char* text) { return cell(std::string_view(text)); }
    CsvWriter& cell(double value) { return cell(format_double(value)); }
    CsvWriter& cell(std::int64_t value) { return cell(std::to_string(value)); }
    CsvWriter& cell(std::uint64_t value) { return cell(std::to_string(value)); }
    CsvWriter& cell(int value) { return cell(std::to_string(value)); }
    CsvWriter& cell(bool value) { return cell(value ? "true" : "false"); }

    /// Terminates the current row.
    void end_row();

private:
    std::ostream& out_;
    bool row_open_ = false;
};

} // namespace qaoaws
