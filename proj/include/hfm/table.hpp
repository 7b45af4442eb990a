#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace hfm {

inline constexpr const char* code_version = "0.1.0";

/// Numeric table with provenance metadata.
///
/// CSV layout: one `# key=value` line per metadata entry (in insertion order),
/// then the header line, then one line per row. Numbers are written with 17
/// significant digits so parse(emit(t)) == t.
struct SpectrumTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Metadata keys every table must carry.
    static const std::vector<std::string>& required_metadata();

    void set(const std::string& key, const std::string& value);
    const std::string* find(const std::string& key) const;

    /// Throws ConfigError on missing provenance, ragged rows or non-finite entries.
    void validate() const;

    std::string to_csv() const;
    static SpectrumTable from_csv(const std::string& text);

    bool operator==(const SpectrumTable&) const = default;
};

/// Plain comma separated dump, 17 significant digits.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);

std::string format_double(double v);

}  // namespace hfm
