#include <doctest.h>

#include <set>
#include <string>

#include "gyro/catalog.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyrogroup.hpp"

using namespace gyro;

TEST_CASE("lookup by key") {
    const auto& g15 = catalog::get("G15");
    CHECK(g15.group.order() == 15);
    CHECK(is_gyrocommutative(g15.group));
    CHECK(catalog::get("G16").group.order() == 16);
    CHECK_THROWS_AS(catalog::get("no-such"), lookup_error);
    try {
        catalog::get("no-such");
    } catch (const lookup_error& e) {
        CHECK(std::string(e.what()).find("G8-example") != std::string::npos);
    }
}

TEST_CASE("every non-erratum entry passes all six checks") {
    int valid_count = 0;
    for (const auto& e : catalog::entries()) {
        if (!e.valid) {
            CHECK_FALSE(e.errata.empty());
            continue;
        }
        ++valid_count;
        const auto report = validate(e.group.table(), e.group.identity());
        for (const auto& [axiom, result] : report.axiom_results)
            CHECK(result.status == CheckStatus::pass);
    }
    CHECK(valid_count == 12);
}

TEST_CASE("the printed G8 gyration table is I/A with A = (1 6)(2 5)") {
    const auto& g8 = catalog::get("G8-example").group;
    const Permutation a_perm({0, 6, 5, 3, 4, 2, 1, 7});
    // rows of the printed gyro table, I/A per pair
    const char* printed[8] = {
        "IIIIIIII", "IIAAAAII", "IAIAAIAI", "IAAIIAAI",
        "IAAIIAAI", "IAIAAIAI", "IIAAAAII", "IIIIIIII",
    };
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const Permutation want =
                printed[x][y] == 'A' ? a_perm : Permutation::identity(8);
            CHECK(gyration(g8, x, y) == want);
        }
}

TEST_CASE("G(4): corrected row 1, sample entries, involution levels") {
    const auto& g4 = catalog::g4();
    CHECK(g4.order() == 16);
    CHECK(g4.oplus(2, 4) == 6);
    CHECK(g4.oplus(8, 1) == 11);
    for (int b = 0; b < 16; ++b) CHECK(g4.oplus(0, b) == b);
    for (int a = 0; a < 16; ++a) CHECK(g4.oplus(a, 0) == a);
    CHECK_FALSE(catalog::get("G4").errata.empty());
    for (int j = 8; j < 16; ++j) {
        CHECK(order_of(g4, j) == 2);
        CHECK(cyclic_subgyrogroup(g4, j) == std::vector<int>{0, j});
    }
}

TEST_CASE("dihedralize reproduces the printed Dih(G8) table entrywise") {
    const auto& base = catalog::get("DihG8-base").group;
    REQUIRE(is_gyrocommutative(base));
    REQUIRE(has_skew_left_loop(base));
    const auto dih = catalog::dihedralize(base);
    const auto& printed = catalog::get("DihG8").group;
    CHECK(dih.order() == 2 * base.order());
    CHECK(dih.table() == printed.table());
    // spot entries: (1,1)+(1,0) = (0,1) and (4,1)+(1,0) = (7,1)
    CHECK(printed.oplus(9, 1) == 8);
    CHECK(printed.oplus(12, 1) == 15);
    // the second-coordinate-0 block is the base table itself
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(dih.oplus(a, b) == base.oplus(a, b));
    CHECK(validate(dih.table(), 0).passed());
}

TEST_CASE("dihedralize names the failed precondition") {
    CHECK_THROWS_WITH_AS(catalog::dihedralize(catalog::get("G15").group),
                         doctest::Contains("skew left loop"), structure_error);
    CHECK_THROWS_WITH_AS(catalog::dihedralize(catalog::get("K1-table9").group),
                         doctest::Contains("gyro-commutativity"), structure_error);
}

TEST_CASE("erratum-tolerant entries carry their inconsistencies") {
    const auto& k1 = catalog::get("K1-as-printed");
    CHECK_FALSE(k1.valid);
    CHECK(k1.errata.size() == 3);
    const auto& n1 = catalog::get("N1-as-printed");
    CHECK(n1.valid);
    CHECK_FALSE(n1.errata.empty());  // collision with the printed M(1) table
    CHECK(n1.group.table() == catalog::get("M1-as-printed").group.table());
}
