#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "expected_tables.hpp"
#include "smoothcolor/groups.hpp"
#include "smoothcolor/tiling.hpp"

using namespace smoothcolor;

TEST_CASE("polyomino shapes") {
    auto t6 = polyomino(6);
    CHECK(t6.size() == 6);
    CHECK(t6[0] == ExponentVector{0, 0, 0});   // 1
    CHECK(t6[3] == ExponentVector{2, 0, 0});   // 4
    CHECK(t6[5] == ExponentVector{1, 1, 0});   // 6
    CHECK(polyomino(1).size() == 1);
    CHECK(polyomino(10).size() == 10);
}

TEST_CASE("direct sum decomposition for a multiplicative coloring") {
    Coloring c = table_to_coloring(expected::z6_103());
    Box w = default_window(c.ctx(), 13);
    auto B = coloring_to_translates(c, 1, w);
    CHECK_FALSE(B.empty());
    auto rep = check_direct_sum(polyomino(6), B, w);
    CHECK(rep.ok);
}

TEST_CASE("direct sum failure is reported with a witness cell") {
    Coloring c = table_to_coloring(expected::z6_103());
    Box w = default_window(c.ctx(), 13);
    auto B = coloring_to_translates(c, 1, w);
    // Duplicate (shifted) a translate that sits well inside the window, so
    // the double coverage lands in the checked interior.
    auto mid = std::find_if(B.begin(), B.end(), [](const ExponentVector& b) {
        return b[0] >= 4 && b[0] <= 8 && b[1] >= 4 && b[1] <= 8 && b[2] >= 4 && b[2] <= 8;
    });
    REQUIRE(mid != B.end());
    B.push_back(*mid);
    B.back()[0] += 1;
    auto rep = check_direct_sum(polyomino(6), B, w);
    CHECK_FALSE(rep.ok);
    CHECK(rep.cell.has_value());
    CHECK(rep.covers != 1);
}

TEST_CASE("translation invariance of group colorings") {
    Coloring c = table_to_coloring(expected::z6_7());
    Box w = default_window(c.ctx(), 13);
    CHECK(is_translation_invariant(c, w));
    CHECK_THROWS_AS(is_translation_invariant(c, default_window(c.ctx(), 6)), WindowTooSmall);
    auto t = extract_cayley_if_invariant(c, w);
    REQUIRE(t.has_value());
    CHECK(*t == expected::z6_7());
}

TEST_CASE("identity lattice has index n") {
    for (const auto& [p, tab] : expected::z6_tables()) {
        Coloring c = table_to_coloring(tab);
        auto lr = identity_lattice(c, default_window(c.ctx(), 13));
        CHECK(lr.index == 6);
        CHECK(lr.basis.size() == 3);
    }
}

TEST_CASE("csv and svg export") {
    namespace fs = std::filesystem;
    SmoothContext ctx(3);
    Coloring c(ctx, LinearColoring{{1, 2}});
    Box w = default_window(ctx, 4);
    auto dir = fs::temp_directory_path() / "smoothcolor_test_export";
    fs::create_directories(dir);
    auto csv = (dir / "c.csv").string();
    export_csv(c, w, csv);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "alpha_1,alpha_2,label");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == w.size());

    auto svg = (dir / "c.svg").string();
    export_svg(c, w, svg);
    CHECK(fs::exists(svg));
    CHECK(fs::file_size(svg) > 100);

    // 3-d coloring renders as one file per slice of the last coordinate
    // (side 3 window: exponents 0..2, so three slices).
    Coloring c6 = table_to_coloring(expected::z6_7());
    auto slices = (dir / "slices").string();
    export_svg(c6, default_window(c6.ctx(), 3), slices);
    CHECK(fs::is_directory(slices));
    std::size_t files = 0;
    for (auto& e : fs::directory_iterator(slices)) files += e.is_regular_file();
    CHECK(files == 3);
    fs::remove_all(dir);
}
