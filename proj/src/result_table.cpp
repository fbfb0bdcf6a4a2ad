#include "sirnet/result_table.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace sirnet {

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double round_sig9(double v) { return std::strtod(format_sig9(v).c_str(), nullptr); }

void ResultTable::meta(const std::string& key, double value) { metadata.emplace_back(key, format_sig9(value)); }

void ResultTable::meta(const std::string& key, std::uint64_t value) {
    metadata.emplace_back(key, std::to_string(value));
}

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable: row width does not match column count");
    rows.push_back(std::move(row));
}

void write_csv(const ResultTable& table, std::ostream& os) {
    for (const auto& [k, v] : table.metadata) os << "# " << k << " = " << v << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    for (const auto& row : table.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            os << format_sig9(row[c]) << (c + 1 < row.size() ? "," : "\n");
}

void write_json(const ResultTable& table, std::ostream& os) {
    nlohmann::ordered_json j;
    auto& meta = j["metadata"];
    for (const auto& [k, v] : table.metadata) meta[k] = v;
    auto& cols = j["columns"];
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        auto& arr = cols[table.columns[c]];
        arr = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) arr.push_back(round_sig9(row[c]));
    }
    os << j.dump(2) << "\n";
}

std::vector<double> parse_theta_grid_db(const std::string& spec) {
    double lo = 0, step = 0, hi = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3)
        throw std::invalid_argument("theta grid must be min:step:max (dB)");
    if (!(step > 0.0) || hi < lo) throw std::invalid_argument("theta grid: need step > 0 and max >= min");
    const int points = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    return theta_grid_db(lo, lo + step * (points - 1), points);
}

std::vector<double> theta_grid_db(double min_db, double max_db, int points) {
    if (points < 1) throw std::invalid_argument("theta grid: need at least one point");
    if (points > 1 && !(max_db > min_db)) throw std::invalid_argument("theta grid: max must exceed min");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        const double db = points == 1 ? min_db : min_db + (max_db - min_db) * i / (points - 1);
        grid[i] = std::pow(10.0, db / 10.0);
    }
    return grid;
}

}  // namespace sirnet
