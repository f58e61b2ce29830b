#include "gyro/catalog.hpp"

#include <sstream>

#include "gyro/errors.hpp"

namespace gyro::catalog {

namespace {

// G8 of the worked example ("gyro table of G_8"), gyrations I and (1 6)(2 5).
constexpr int kG8Example[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 5, 6, 0, 7, 1, 2, 4},
    {4, 2, 1, 7, 0, 6, 5, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

// "Gyro table of K(1)" exactly as printed: row 0 repeats 2, row 1 repeats 6,
// and the column header lists an element 8.  Kept for the validator tests.
constexpr int kK1AsPrinted[8][8] = {
    {0, 1, 2, 2, 3, 4, 5, 6},
    {1, 2, 3, 4, 5, 6, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

constexpr int kL1[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 5, 4, 3, 2, 0, 1},
    {7, 6, 4, 5, 2, 3, 1, 0},
};

// M(1) and N(1) are printed with identical tables; both are embedded as
// printed and the collision is flagged in the N(1) errata.
constexpr int kM1AsPrinted[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 1, 0, 3, 2},
    {5, 4, 7, 6, 0, 1, 2, 3},
    {6, 7, 5, 4, 2, 3, 1, 0},
    {7, 6, 4, 5, 3, 2, 0, 1},
};

constexpr int kO1[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 7, 6, 1, 0, 2, 3},
    {5, 4, 6, 7, 0, 1, 3, 2},
    {6, 7, 5, 4, 2, 3, 1, 0},
    {7, 6, 4, 5, 3, 2, 0, 1},
};

// Left block of the paired "Cayley table K(1)" / "gyro table of G_8"
// print; consistent, adopted as K(1).
constexpr int kK1Table9[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

// Right block of the same paired print, labeled only with a bare oplus;
// the surrounding text calls it G_{8,2}.
constexpr int kG82Table9[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 7, 6, 0, 5, 2, 4, 3},
    {2, 5, 7, 6, 0, 3, 1, 4},
    {3, 0, 5, 7, 6, 4, 2, 1},
    {4, 6, 0, 5, 7, 1, 3, 2},
    {5, 2, 3, 4, 1, 7, 0, 6},
    {6, 4, 1, 2, 3, 0, 7, 5},
    {7, 3, 4, 1, 2, 6, 5, 0},
};

// The 2-gyro-group G(4) = P(4) u H(4).  Row 1 as printed is corrupt
// ("1 2 3 4 5 0 7 9 10 11 8 12 13 14 15 8"); embedded here with the
// additive pattern every other P(4) row satisfies.
constexpr int kG4[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8},
    {2, 3, 4, 5, 6, 7, 0, 1, 10, 11, 12, 13, 14, 15, 8, 9},
    {3, 4, 5, 6, 7, 0, 1, 2, 11, 12, 13, 14, 15, 8, 9, 10},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11},
    {5, 6, 7, 0, 1, 2, 3, 4, 13, 14, 15, 8, 9, 10, 11, 12},
    {6, 7, 0, 1, 2, 3, 4, 5, 14, 15, 8, 9, 10, 11, 12, 13},
    {7, 0, 1, 2, 3, 4, 5, 6, 15, 8, 9, 10, 11, 12, 13, 14},
    {8, 11, 14, 9, 12, 15, 10, 13, 0, 3, 6, 1, 4, 7, 2, 5},
    {9, 12, 15, 10, 13, 8, 11, 14, 5, 0, 3, 6, 1, 4, 7, 2},
    {10, 13, 8, 11, 14, 9, 12, 15, 2, 5, 0, 3, 6, 1, 4, 7},
    {11, 14, 9, 12, 15, 10, 13, 8, 7, 2, 5, 0, 3, 6, 1, 4},
    {12, 15, 10, 13, 8, 11, 14, 9, 4, 7, 2, 5, 0, 3, 6, 1},
    {13, 8, 11, 14, 9, 12, 15, 10, 1, 4, 7, 2, 5, 0, 3, 6},
    {14, 9, 12, 15, 10, 13, 8, 11, 6, 1, 4, 7, 2, 5, 0, 3},
    {15, 10, 13, 8, 11, 14, 9, 12, 3, 6, 1, 4, 7, 2, 5, 0},
};

constexpr int kG15[15][15] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14},
    {1, 2, 0, 4, 6, 11, 3, 14, 13, 7, 8, 12, 5, 10, 9},
    {2, 0, 1, 6, 3, 12, 4, 9, 10, 14, 13, 5, 11, 8, 7},
    {3, 4, 5, 7, 8, 9, 13, 0, 1, 2, 12, 6, 14, 11, 10},
    {4, 10, 8, 11, 13, 1, 5, 6, 14, 0, 7, 2, 9, 12, 3},
    {5, 14, 12, 9, 7, 8, 2, 11, 0, 10, 3, 4, 6, 1, 13},
    {6, 11, 4, 13, 10, 3, 14, 8, 12, 1, 2, 9, 7, 5, 0},
    {7, 8, 9, 0, 1, 2, 11, 3, 4, 5, 14, 13, 10, 6, 12},
    {8, 13, 6, 10, 11, 0, 12, 4, 5, 3, 9, 7, 2, 14, 1},
    {9, 5, 11, 14, 0, 6, 7, 10, 2, 12, 1, 3, 13, 4, 8},
    {10, 3, 13, 12, 5, 14, 8, 2, 9, 6, 11, 0, 1, 7, 4},
    {11, 12, 7, 1, 14, 4, 9, 13, 6, 8, 0, 10, 3, 2, 5},
    {12, 6, 3, 8, 9, 7, 10, 1, 11, 13, 5, 14, 4, 0, 2},
    {13, 7, 14, 2, 12, 10, 1, 5, 3, 4, 6, 8, 0, 9, 11},
    {14, 9, 10, 5, 2, 13, 0, 12, 7, 11, 4, 1, 8, 3, 6},
};

constexpr int kG16[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
    {2, 3, 1, 0, 6, 7, 5, 4, 11, 10, 8, 9, 15, 14, 12, 13},
    {3, 2, 0, 1, 7, 6, 4, 5, 10, 11, 9, 8, 14, 15, 13, 12},
    {4, 5, 6, 7, 3, 2, 0, 1, 15, 14, 12, 13, 9, 8, 11, 10},
    {5, 4, 7, 6, 2, 3, 1, 0, 14, 15, 13, 12, 8, 9, 10, 11},
    {6, 7, 5, 4, 0, 1, 2, 3, 13, 12, 15, 14, 10, 11, 9, 8},
    {7, 6, 4, 5, 1, 0, 3, 2, 12, 13, 14, 15, 11, 10, 8, 9},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 9, 8, 14, 15, 13, 12, 3, 2, 0, 1, 7, 6, 4, 5},
    {11, 10, 8, 9, 15, 14, 12, 13, 2, 3, 1, 0, 6, 7, 5, 4},
    {12, 13, 14, 15, 11, 10, 8, 9, 6, 7, 5, 4, 0, 1, 2, 3},
    {13, 12, 15, 14, 10, 11, 9, 8, 7, 6, 4, 5, 1, 0, 3, 2},
    {14, 15, 13, 12, 8, 9, 10, 11, 4, 5, 6, 7, 3, 2, 0, 1},
    {15, 14, 12, 13, 9, 8, 11, 10, 5, 4, 7, 6, 2, 3, 1, 0},
};

// Top-left 8x8 block of the Dih(G_8) table: the order-8 gyro-group the
// dihedralization extends (rows (a,0), columns (b,0)).
constexpr int kDihBase[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 3, 0, 2, 7, 4, 5, 6},
    {2, 0, 3, 1, 5, 6, 7, 4},
    {3, 2, 1, 0, 6, 7, 4, 5},
    {4, 5, 7, 6, 3, 2, 0, 1},
    {5, 6, 4, 7, 2, 0, 1, 3},
    {6, 7, 5, 4, 0, 1, 3, 2},
    {7, 4, 6, 5, 1, 3, 2, 0},
};

// Dih(G_8) exactly as printed, both column blocks; (a,i) encoded a+8i.
constexpr int kDihG8Printed[16][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 3, 0, 2, 7, 4, 5, 6, 9, 11, 8, 10, 15, 12, 13, 14},
    {2, 0, 3, 1, 5, 6, 7, 4, 10, 8, 11, 9, 13, 14, 15, 12},
    {3, 2, 1, 0, 6, 7, 4, 5, 11, 10, 9, 8, 14, 15, 12, 13},
    {4, 5, 7, 6, 3, 2, 0, 1, 12, 13, 15, 14, 11, 10, 8, 9},
    {5, 6, 4, 7, 2, 0, 1, 3, 13, 14, 12, 15, 10, 8, 9, 11},
    {6, 7, 5, 4, 0, 1, 3, 2, 14, 15, 13, 12, 8, 9, 11, 10},
    {7, 4, 6, 5, 1, 3, 2, 0, 15, 12, 14, 13, 9, 11, 10, 8},
    {8, 10, 9, 11, 14, 13, 12, 15, 0, 2, 1, 3, 6, 5, 4, 7},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2, 5, 4, 7, 6},
    {10, 11, 8, 9, 15, 14, 13, 12, 2, 3, 0, 1, 7, 6, 5, 4},
    {11, 9, 10, 8, 12, 15, 14, 13, 3, 1, 2, 0, 4, 7, 6, 5},
    {12, 15, 13, 14, 8, 10, 11, 9, 4, 7, 5, 6, 0, 2, 3, 1},
    {13, 12, 14, 15, 9, 8, 10, 11, 5, 4, 6, 7, 1, 0, 2, 3},
    {14, 13, 15, 12, 11, 9, 8, 10, 6, 5, 7, 4, 3, 1, 0, 2},
    {15, 14, 12, 13, 10, 11, 9, 8, 7, 6, 4, 5, 2, 3, 1, 0},
};

template <size_t N>
std::vector<std::vector<int>> to_table(const int (&data)[N][N]) {
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (size_t r = 0; r < N; ++r)
        for (size_t c = 0; c < N; ++c) t[r][c] = data[r][c];
    return t;
}

std::vector<std::string> pair_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < n; ++a)
            labels.push_back("(" + std::to_string(a) + "," + std::to_string(i) + ")");
    return labels;
}

CatalogEntry make_valid(std::string key, std::vector<std::vector<int>> table,
                        std::string provenance, std::vector<std::string> errata = {},
                        std::vector<std::string> labels = {}) {
    GyroGroup g = GyroGroup::checked(key, std::move(table), 0, std::move(labels));
    return CatalogEntry{std::move(key), std::move(g), std::move(provenance), std::move(errata),
                        true};
}

CatalogEntry make_erratum_tolerant(std::string key, std::vector<std::vector<int>> table,
                                   std::string provenance, std::vector<std::string> errata) {
    GyroGroup g = GyroGroup::unchecked(key, std::move(table));
    return CatalogEntry{std::move(key), std::move(g), std::move(provenance), std::move(errata),
                        false};
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(make_valid("G8-example", to_table(kG8Example),
                             "gyro table of G_8 (worked example, with gyration (1 6)(2 5))"));
    out.push_back(make_erratum_tolerant(
        "K1-as-printed", to_table(kK1AsPrinted), "gyro table of K(1), as printed",
        {"column header lists 8 among the elements",
         "row 0 repeats 2 (not a Latin row)", "row 1 repeats 6 (not a Latin row)"}));
    out.push_back(make_valid("K1-table9", to_table(kK1Table9),
                             "Cayley table K(1) (left block of the paired K(1)/G_{8,2} print)"));
    out.push_back(make_valid("L1", to_table(kL1), "Cayley table of L(1)"));
    out.push_back(make_valid("M1-as-printed", to_table(kM1AsPrinted), "gyro table of M(1)"));
    out.push_back(make_valid(
        "N1-as-printed", to_table(kM1AsPrinted), "gyro table of N(1)",
        {"printed identically to the M(1) table although N(1) is a distinct gyro-group",
         "the drawn N(1) G-graph for S={5,6,7} does not match this table"}));
    out.push_back(make_valid("O1", to_table(kO1), "gyro table of O(1)"));
    out.push_back(make_valid(
        "G82-table9", to_table(kG82Table9),
        "right block of the paired K(1)/G_{8,2} print",
        {"block is labeled only with a bare oplus; the surrounding example names it G_{8,2}"}));
    out.push_back(make_valid(
        "G4", to_table(kG4), "Cayley table of G(4)",
        {"row 1 as printed has 16+ entries and repeats 8; corrected to the additive "
         "pattern 1+b = (1+b) mod 8 (shifted by 8 on H(4)) that every other P(4) row "
         "satisfies"}));
    out.push_back(make_valid("G15", to_table(kG15), "Cayley table of the gyro-group G_15"));
    out.push_back(make_valid("G16", to_table(kG16), "addition table of the gyro-group G_16"));
    out.push_back(make_valid("DihG8-base", to_table(kDihBase),
                             "second-coordinate-0 block of the Dih(G_8) table"));
    out.push_back(make_valid("DihG8", to_table(kDihG8Printed),
                             "Cayley table of Dih(G_8), elements (a,i) encoded a+8i", {},
                             pair_labels(8)));
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = build_entries();
    return all;
}

const CatalogEntry& get(const std::string& key) {
    for (const auto& e : entries())
        if (e.key == key) return e;
    std::ostringstream msg;
    msg << "unknown catalog key '" << key << "'; available:";
    for (const auto& e : entries()) msg << " " << e.key;
    throw lookup_error(msg.str());
}

std::vector<std::string> keys() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.key);
    return out;
}

const GyroGroup& g4() { return get("G4").group; }

GyroGroup dihedralize(const GyroGroup& g) {
    if (!is_gyrocommutative(g))
        throw structure_error("not dihedralizable: '" + g.name() +
                              "' fails gyro-commutativity");
    if (!has_skew_left_loop(g))
        throw structure_error("not dihedralizable: '" + g.name() +
                              "' fails the skew left loop property");
    const int n = g.order();
    std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int j = 0; j < 2; ++j) {
                t[a][b + n * j] = g.oplus(a, b) + n * j;
                t[a + n][b + n * j] = g.oplus(a, left_inverse(g, b)) + n * (1 - j);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < n; ++a) labels.push_back("(" + g.label(a) + "," + std::to_string(i) + ")");
    return GyroGroup::checked("Dih(" + g.name() + ")", std::move(t), 0, std::move(labels));
}

}  // namespace gyro::catalog
