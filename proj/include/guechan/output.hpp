#pragma once

#include <optional>
#include <string>
#include <vector>

namespace guechan {

// One named curve over a t-grid, optionally with standard errors and a
// normalized column (value / norm).
struct CurveTable {
    std::string kind;  // metadata: r2, r41, r4, mc, f, var_diag, ...
    int n = 0;
    std::string grid = "geometric";
    std::uint64_t seed = 0;
    std::vector<double> t;
    std::vector<double> value;
    std::optional<std::vector<double>> std_error;
    std::optional<double> norm;  // emit value/norm as a third column when set
    std::string norm_label;      // header label for the normalized column
};

// 17 significant digits, '.' decimal, plain ASCII.
std::string format_double(double v);

// Serialize to CSV (header "t,value[,std_error][,<norm_label>]") or to a JSON
// object with {kind, n, grid, seed, version} metadata plus the data arrays.
std::string to_csv(const CurveTable& table);
std::string to_json(const CurveTable& table);

// Write atomically: to "<path>.tmp" then rename. No partial files on failure.
void write_file_atomic(const std::string& path, const std::string& contents);

extern const char* const kVersion;

}  // namespace guechan
