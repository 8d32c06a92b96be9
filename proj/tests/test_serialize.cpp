#include <filesystem>
#include <fstream>
#include "json.hpp"

#include "doctest.h"
#include "expected_tables.hpp"
#include "smoothcolor/groups.hpp"
#include "smoothcolor/serialize.hpp"
#include "smoothcolor/strips.hpp"

using namespace smoothcolor;

static void roundtrip(const Coloring& c, const Box& w) {
    Coloring back = coloring_from_json(coloring_to_json(c));
    CHECK(back.n() == c.n());
    CHECK(colorings_equal(c, back, w));
}

TEST_CASE("json round trips for every variant") {
    SmoothContext ctx6(6);
    roundtrip(Coloring(ctx6, LinearColoring{{1, 3, 5}}), default_window(ctx6, 5));
    roundtrip(Coloring(ctx6, PowerResidueColoring{17, 103}), default_window(ctx6, 5));
    roundtrip(table_to_coloring(expected::z6_487()), default_window(ctx6, 5));
    roundtrip(strip_coloring(6, {1, 2, 1, 3, 2}, 6), Box::cube(3, 0, 5));

    Coloring win = canonicalize_labels(Coloring(ctx6, PowerResidueColoring{1, 7}),
                                       default_window(ctx6, 4));
    roundtrip(win, default_window(ctx6, 4));
}

TEST_CASE("literal grammar") {
    Coloring lin = parse_coloring("linear:n=7:1,3,5,6");
    CHECK(lin.n() == 7);
    CHECK(std::get<LinearColoring>(lin.variant()).coeffs == std::vector<int>{1, 3, 5, 6});

    Coloring pow = parse_coloring("power:n=6:k=17,p=103");
    auto& pr = std::get<PowerResidueColoring>(pow.variant());
    CHECK(pr.k == 17);
    CHECK(pr.p == 103);

    Coloring strip = parse_coloring("strip:n=6:1,2,1");
    CHECK(std::get<StripColoring>(strip.variant()).prefix == std::vector<int>{1, 2, 1});

    CHECK_THROWS_AS(parse_coloring("linear:n=7"), ParseError);
    CHECK_THROWS_AS(parse_coloring("mystery:n=7:1"), ParseError);
}

TEST_CASE("file literal") {
    namespace fs = std::filesystem;
    auto path = fs::temp_directory_path() / "smoothcolor_roundtrip.json";
    Coloring c = table_to_coloring(expected::z6_7());
    {
        std::ofstream out(path);
        out << coloring_to_json(c);
    }
    Coloring back = parse_coloring("@" + path.string());
    CHECK(colorings_equal(c, back, default_window(c.ctx(), 5)));
    fs::remove(path);

    CHECK_THROWS_AS(parse_coloring("@/nonexistent/file.json"), ParseError);
}

TEST_CASE("invalid group table is rejected on load") {
    Coloring c = table_to_coloring(expected::z6_7());
    // Corrupt one table cell: the first row 1,2,...,6 gets a duplicate entry.
    auto j = nlohmann::json::parse(coloring_to_json(c));
    REQUIRE(j["table"][0] == 1);
    j["table"][0] = 2;
    CHECK_THROWS(coloring_from_json(j.dump()));
}
