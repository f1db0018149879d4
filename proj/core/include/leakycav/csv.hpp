#pragma once

#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace leakycav {

// Comma separator, '.' decimal point, '\n' line endings, mandatory header,
// 15 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::vector<std::string> header);

    void row(std::initializer_list<double> values);
    void row(std::span<const double> values);
    // Mixed row with leading text cells (used by classification tables).
    void row_text(std::span<const std::string> cells);

    static std::string format(double v);

private:
    std::ofstream out_;
    std::size_t n_cols_;
};

} // namespace leakycav
