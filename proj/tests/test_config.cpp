#include <doctest.h>

#include <sstream>

#include "cornell/config.hpp"

using namespace cornell;

namespace {

config::ConfigFile parse(const std::string& text) {
    std::istringstream in(text);
    return config::parse(in);
}

}  // namespace

TEST_CASE("key = value lines with comments") {
    const auto cfg = parse("# bottomonium\n\nmu = 2.465\n  b=0.18   # GeV^2\nmethod = shooting\n");
    CHECK(cfg.get_number("mu") == 2.465);
    CHECK(cfg.get_number("b") == 0.18);
    CHECK(cfg.get("method") == "shooting");
    CHECK(cfg.contains("mu"));
    CHECK_FALSE(cfg.contains("alpha"));
    CHECK_FALSE(cfg.get("alpha"));
}

TEST_CASE("known keys") {
    for (const char* key : {"mu", "b", "alpha", "C", "quark_mass", "preset", "method", "format", "precision", "xi_max"}) {
        CHECK(config::ConfigFile::is_known_key(key));
    }
    CHECK_FALSE(config::ConfigFile::is_known_key("c"));
    CHECK_FALSE(config::ConfigFile::is_known_key("lambda"));
}

TEST_CASE("malformed files") {
    CHECK_THROWS_AS(parse("mu 2.4\n"), config::ConfigError);
    CHECK_THROWS_AS(parse("= 2.4\n"), config::ConfigError);
    CHECK_THROWS_AS(parse("mu =\n"), config::ConfigError);
    CHECK_THROWS_AS(parse("speed = 3\n"), config::ConfigError);
    CHECK_THROWS_AS(parse("mu = 1\nmu = 2\n"), config::ConfigError);
    try {
        parse("mu = 1\n\nbogus = 2\n");
        FAIL("expected an error");
    } catch (const config::ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    const auto cfg = parse("b = fast\n");
    CHECK_THROWS_AS(cfg.get_number("b"), config::ConfigError);
    CHECK_THROWS_AS(config::load("/nonexistent/cornell.cfg"), config::ConfigError);
}

TEST_CASE("set") {
    config::ConfigFile cfg;
    cfg.set("alpha", "0.52");
    CHECK(cfg.get_number("alpha") == 0.52);
}
