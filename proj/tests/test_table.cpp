#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "sirnet/result_table.hpp"

using namespace sirnet;

TEST_CASE("theta grid parsing") {
    const auto grid = parse_theta_grid_db("-10:0.5:30");
    CHECK(grid.size() == 81);
    CHECK(grid.front() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(1000.0).epsilon(1e-12));
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
    CHECK_THROWS_AS(parse_theta_grid_db("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta_grid_db("0:-1:10"), std::invalid_argument);
    CHECK(parse_theta_grid_db("0:1:0").size() == 1);
    CHECK(theta_grid_db(0.0, 0.0, 1).size() == 1);
    CHECK_THROWS_AS(theta_grid_db(0.0, 0.0, 2), std::invalid_argument);
}

TEST_CASE("9-significant-digit formatting") {
    CHECK(format_sig9(0.5) == "0.5");
    CHECK(round_sig9(1.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(round_sig9(round_sig9(1.0 / 3.0)) == round_sig9(1.0 / 3.0));
}

TEST_CASE("CSV layout") {
    ResultTable t;
    t.meta("command", "demo");
    t.meta("seed", std::uint64_t{42});
    t.columns = {"a", "b"};
    t.add_row({1.0, 0.25});
    t.add_row({2.0, 1.0 / 3.0});
    std::ostringstream os;
    write_csv(t, os);
    const std::string text = os.str();
    CHECK(text.find("# command = demo") != std::string::npos);
    CHECK(text.find("# seed = 42") != std::string::npos);
    CHECK(text.find("a,b\n") != std::string::npos);
    CHECK(text.find("2,0.333333333\n") != std::string::npos);
    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("CSV and JSON carry identical numeric values") {
    ResultTable t;
    t.meta("command", "demo");
    t.columns = {"x", "y"};
    for (int i = 1; i <= 20; ++i) t.add_row({i * 0.1, std::sqrt(i) / 3.0});

    std::ostringstream csv_os, json_os;
    write_csv(t, csv_os);
    write_json(t, json_os);

    // parse both back and compare as doubles
    const auto j = nlohmann::json::parse(json_os.str());
    std::istringstream is(csv_os.str());
    std::string line;
    std::getline(is, line);  // metadata
    std::getline(is, line);  // header
    for (int i = 0; i < 20; ++i) {
        std::getline(is, line);
        const auto comma = line.find(',');
        const double x = std::strtod(line.substr(0, comma).c_str(), nullptr);
        const double y = std::strtod(line.substr(comma + 1).c_str(), nullptr);
        CHECK(x == j["columns"]["x"][i].get<double>());
        CHECK(y == j["columns"]["y"][i].get<double>());
    }
}
