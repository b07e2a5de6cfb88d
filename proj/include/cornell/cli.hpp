#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end: `eigen`, `table`, `scan` and `wavefunction`.
// Exit codes: 0 success, 1 computation failure, 2 usage error.

namespace cornell::cli {

enum class OutputFormat { csv, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Rectangular text grid with one header row.
struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool failed = false;  ///< some cell could not be computed ("ERR")
};

/// CSV (comma separated, LF) or space-aligned columns.
void render(const TextTable& table, OutputFormat format, std::ostream& out);

/// Shortest form with `digits` significant digits, locale independent.
std::string format_significant(double value, int digits);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

/// Live reproduction of the published tables: "tab1", "tab2" or "tab3".
/// `precision` is the significant-digit count for dimensionless cells.
TextTable build_table(const std::string& which, int precision = 6);

/// Entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cornell::cli
