#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sirnet {

// Rectangular numeric table with an ordered metadata block. CSV output puts the
// metadata in '#'-prefixed header lines; JSON emits {"metadata":..., "columns":...}.
// All numbers pass through the same 9-significant-digit formatter so the two
// emissions carry identical values.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void meta(const std::string& key, const std::string& value) { metadata.emplace_back(key, value); }
    void meta(const std::string& key, double value);
    void meta(const std::string& key, std::uint64_t value);
    void add_row(std::vector<double> row);
};

// value formatted with 9 significant digits
std::string format_sig9(double v);

// the double that format_sig9 prints (round-trip of the 9-digit form)
double round_sig9(double v);

void write_csv(const ResultTable& table, std::ostream& os);
void write_json(const ResultTable& table, std::ostream& os);

// "min:step:max" in dB -> ascending linear theta grid
std::vector<double> parse_theta_grid_db(const std::string& spec);
std::vector<double> theta_grid_db(double min_db, double max_db, int points);

}  // namespace sirnet
