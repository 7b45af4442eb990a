#include "hfm/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "hfm/units.hpp"

namespace hfm {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("malformed number '" + s + "' in table");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

const std::vector<std::string>& SpectrumTable::required_metadata() {
    static const std::vector<std::string> keys = {"kind", "beta_meV", "rho0", "k_max", "n_max", "prefactor",
                                                  "code_version"};
    return keys;
}

void SpectrumTable::set(const std::string& key, const std::string& value) {
    for (auto& kv : metadata) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    metadata.emplace_back(key, value);
}

const std::string* SpectrumTable::find(const std::string& key) const {
    for (const auto& kv : metadata)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

void SpectrumTable::validate() const {
    for (const auto& key : required_metadata())
        if (!find(key)) throw ConfigError("table is missing provenance metadata '" + key + "'");
    if (columns.empty()) throw ConfigError("table has no columns");
    for (const auto& row : rows) {
        if (row.size() != columns.size()) throw ConfigError("ragged table row");
        for (double v : row)
            if (!std::isfinite(v)) throw ConfigError("non-finite table entry");
    }
}

std::string SpectrumTable::to_csv() const {
    std::ostringstream os;
    for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
    return os.str();
}

SpectrumTable SpectrumTable::from_csv(const std::string& text) {
    SpectrumTable t;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (!header_seen && line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ConfigError("malformed metadata line '" + line + "'");
            t.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        if (!header_seen) {
            t.columns = split(line, ',');
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) row.push_back(parse_double(cell));
        t.rows.push_back(std::move(row));
    }
    if (!header_seen) throw ConfigError("table has no header line");
    return t;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_double(m(i, j));
        os << '\n';
    }
}

}  // namespace hfm
