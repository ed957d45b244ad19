#include <doctest.h>

#include "wsn/config.hpp"

using namespace wsn;

TEST_CASE("empty text yields the defaults") {
    CHECK(parse_config("") == SimConfig{});
    CHECK(parse_config("# nothing\n\n[sim]\n") == SimConfig{});
}

TEST_CASE("overrides, lists and sink pairs") {
    auto c = parse_config("n_sensors = 12\n"
                          "seed = 99   # trailing comment\n"
                          "power_level_ranges = 10, 20, 30\n"
                          "sink_positions = 50 50; 10 90\n");
    CHECK(c.n_sensors == 12);
    CHECK(c.seed == 99);
    CHECK(c.power_level_ranges == std::vector<double>{10, 20, 30});
    REQUIRE(c.sink_positions.size() == 2);
    CHECK(c.sink_positions[1].x == 10.0);
    CHECK(c.sink_positions[1].y == 90.0);
    CHECK(c.max_range() == 30.0);
}

TEST_CASE("invalid values name the field") {
    auto field_of = [](const char *text) {
        try {
            parse_config(text);
        } catch (const ConfigError &e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of("selfish_threshold = 1.5") == "selfish_threshold");
    CHECK(field_of("selfish_threshold = 0") == "selfish_threshold");
    CHECK(field_of("power_level_ranges = 5, 20") == "power_level_ranges");
    CHECK(field_of("power_level_ranges = 30, 20") == "power_level_ranges");
    CHECK(field_of("power_level_ranges = 12, 60") == "power_level_ranges");
    CHECK(field_of("n_sensors = -1") == "n_sensors");
    CHECK(field_of("n_sensors = many") == "n_sensors");
    CHECK(field_of("sink_positions = 150 50") == "sink_positions");
    CHECK(field_of("sink_positions =") == "sink_positions");
    CHECK(field_of("bogus = 1") == "bogus");
}

TEST_CASE("format_config parses back to the same config") {
    SimConfig c;
    c.seed = 1234567890123ULL;
    c.e_elec = 0.1 + 0.2;
    c.sink_positions = {{1.25, 2.5}, {99.0, 0.0}};
    c.max_rounds = 77;
    CHECK(parse_config(format_config(c)) == c);
}

TEST_CASE("json round trip") {
    SimConfig c;
    c.n_sensors = 3;
    c.eps_amp = 1.0 / 3.0;
    nlohmann::json j = c;
    CHECK(j.get<SimConfig>() == c);
}
