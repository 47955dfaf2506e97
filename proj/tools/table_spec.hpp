#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldpcb::cli {

enum class OutputFormat { Csv, Markdown };

struct TableCell {
    std::string label;
    std::uint32_t q = 0;
    std::string code;  // code description understood by ldpcb_code_parse
    double rate = 0.0;
    std::size_t line = 0;
};

/// Column names: `gv` or `ldpc_upper_<bound>` where <bound> is a registered
/// constant-weight bound with `-` spelled `_`.
struct TableSpec {
    std::vector<std::string> columns{"gv", "ldpc_upper_zero", "ldpc_upper_composite"};
    OutputFormat format = OutputFormat::Csv;
    std::vector<TableCell> cells;
};

class SpecError : public std::runtime_error {
public:
    SpecError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

TableSpec parse_table_spec(const std::string& text);

/// `ldpc_upper_zero_floor` -> `zero-floor`; empty for `gv` or unknown names.
std::string bound_of_column(const std::string& column);

OutputFormat parse_format(const std::string& name);

}  // namespace ldpcb::cli
