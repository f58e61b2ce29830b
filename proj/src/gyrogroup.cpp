#include "gyro/gyrogroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gyro/errors.hpp"

namespace gyro {

namespace {

// Raw-table helpers used by validate(), which runs before any GyroGroup
// exists.

std::vector<int> raw_left_inverses(const std::vector<std::vector<int>>& t, int a, int e) {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(t.size()); ++b)
        if (t[b][a] == e) out.push_back(b);
    return out;
}

// gyr[a,b] as the raw map c -> -(a+b) + (a + (b+c)); callers guarantee
// unique left inverses.
std::vector<int> raw_gyration(const std::vector<std::vector<int>>& t, int a, int b, int e) {
    const int n = static_cast<int>(t.size());
    const int w = raw_left_inverses(t, t[a][b], e)[0];
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = t[w][t[a][t[b][c]]];
    return img;
}

bool is_identity_map(const std::vector<int>& img) {
    for (int i = 0; i < static_cast<int>(img.size()); ++i)
        if (img[i] != i) return false;
    return true;
}

CheckResult pass_result() {
    return {CheckStatus::pass, std::nullopt, ""};
}

CheckResult fail_result(std::array<int, 3> witness, std::string detail) {
    return {CheckStatus::fail, witness, std::move(detail)};
}

CheckResult skipped_result(std::string why) {
    return {CheckStatus::skipped, std::nullopt, std::move(why)};
}

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::rows_latin: return "rows-latin";
        case Axiom::g1: return "G1";
        case Axiom::g2: return "G2";
        case Axiom::g3: return "G3";
        case Axiom::gyr_automorphism: return "gyr-automorphism";
        case Axiom::g4: return "G4";
    }
    return "?";
}

std::string to_string(DerivedProperty p) {
    switch (p) {
        case DerivedProperty::two_sided_identity: return "two-sided-identity";
        case DerivedProperty::two_sided_inverse: return "two-sided-inverse";
        case DerivedProperty::gyr_aa_identity: return "gyr[a,a]=id";
        case DerivedProperty::gyr_0b_identity: return "gyr[0,b]=id";
    }
    return "?";
}

bool ValidationReport::passed() const {
    for (const auto& [axiom, result] : axiom_results)
        if (!result.passed()) return false;
    return !axiom_results.empty();
}

const CheckResult& ValidationReport::axiom(Axiom a) const {
    for (const auto& [axiom, result] : axiom_results)
        if (axiom == a) return result;
    throw argument_error("axiom not present in report");
}

const CheckResult& ValidationReport::derived(DerivedProperty p) const {
    for (const auto& [prop, result] : derived_properties)
        if (prop == p) return result;
    throw argument_error("derived property not present in report");
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const auto& [axiom, result] : axiom_results) {
        out << to_string(axiom) << ": ";
        switch (result.status) {
            case CheckStatus::pass: out << "pass"; break;
            case CheckStatus::fail:
                out << "FAIL";
                if (result.witness) {
                    const auto& w = *result.witness;
                    out << " at " << tuple_str({w[0], w[1], w[2]});
                }
                if (!result.detail.empty()) out << " [" << result.detail << "]";
                break;
            case CheckStatus::skipped:
                out << "skipped";
                if (!result.detail.empty()) out << " [" << result.detail << "]";
                break;
        }
        out << "\n";
    }
    return out.str();
}

ValidationReport validate(const std::vector<std::vector<int>>& table, int identity) {
    const int n = static_cast<int>(table.size());
    ValidationReport report;
    report.order = n;
    report.identity = identity;
    if (n == 0) throw argument_error("empty table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n) throw argument_error("table is not square");
    if (identity < 0 || identity >= n) throw argument_error("identity out of range");

    // rows-latin: every row is a permutation of {0..n-1}.  Out-of-range
    // entries break permutation-ness and are caught here too.
    CheckResult latin = pass_result();
    for (int a = 0; a < n && latin.passed(); ++a) {
        for (int b = 0; b < n && latin.passed(); ++b) {
            if (table[a][b] < 0 || table[a][b] >= n) {
                latin = fail_result({a, b, b}, "entry " + std::to_string(table[a][b]) +
                                                   " out of range in row " + std::to_string(a));
                break;
            }
            for (int c = b + 1; c < n; ++c) {
                if (table[a][b] == table[a][c]) {
                    latin = fail_result({a, b, c},
                                        "row " + std::to_string(a) + " repeats " +
                                            std::to_string(table[a][b]) + " at columns " +
                                            std::to_string(b) + "," + std::to_string(c));
                    break;
                }
            }
        }
    }
    report.axiom_results.emplace_back(Axiom::rows_latin, latin);

    bool entries_ok = true;
    for (int a = 0; a < n && entries_ok; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n) {
                entries_ok = false;
                break;
            }

    // G1: identity + b = b.
    CheckResult g1 = entries_ok ? pass_result() : skipped_result("entries out of range");
    if (entries_ok) {
        for (int b = 0; b < n; ++b) {
            if (table[identity][b] != b) {
                g1 = fail_result({identity, b, table[identity][b]},
                                 std::to_string(identity) + "+" + std::to_string(b) + " = " +
                                     std::to_string(table[identity][b]));
                break;
            }
        }
    }
    report.axiom_results.emplace_back(Axiom::g1, g1);

    // G2: every a has exactly one b with b + a = identity.
    CheckResult g2 = entries_ok ? pass_result() : skipped_result("entries out of range");
    if (entries_ok) {
        for (int a = 0; a < n; ++a) {
            auto inv = raw_left_inverses(table, a, identity);
            if (inv.size() == 1) continue;
            if (inv.empty())
                g2 = fail_result({a, 0, 0}, "no left inverse for " + std::to_string(a));
            else
                g2 = fail_result({a, inv[0], inv[1]},
                                 std::to_string(inv.size()) + " left inverses for " +
                                     std::to_string(a));
            break;
        }
    }
    report.axiom_results.emplace_back(Axiom::g2, g2);

    const bool gyr_ready = latin.passed() && g1.passed() && g2.passed();
    const char* not_ready = "prerequisite check failed; gyration undefined";

    // Cache all gyrations once G2 guarantees them.
    std::vector<std::vector<int>> gyrs;
    if (gyr_ready) {
        gyrs.reserve(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) gyrs.push_back(raw_gyration(table, a, b, identity));
    }
    auto gyr_at = [&](int a, int b) -> const std::vector<int>& { return gyrs[a * n + b]; };

    // G3: a + (b+c) = (a+b) + gyr[a,b]c for all triples.
    CheckResult g3 = gyr_ready ? pass_result() : skipped_result(not_ready);
    if (gyr_ready) {
        for (int a = 0; a < n && g3.passed(); ++a)
            for (int b = 0; b < n && g3.passed(); ++b)
                for (int c = 0; c < n; ++c) {
                    if (table[a][table[b][c]] != table[table[a][b]][gyr_at(a, b)[c]]) {
                        g3 = fail_result({a, b, c}, "gyroassociativity fails");
                        break;
                    }
                }
    }
    report.axiom_results.emplace_back(Axiom::g3, g3);

    // gyr-automorphism: every gyr[a,b] is a bijection preserving oplus.
    CheckResult gauto = gyr_ready ? pass_result() : skipped_result(not_ready);
    if (gyr_ready) {
        for (int a = 0; a < n && gauto.passed(); ++a) {
            for (int b = 0; b < n && gauto.passed(); ++b) {
                const auto& img = gyr_at(a, b);
                std::set<int> values(img.begin(), img.end());
                if (static_cast<int>(values.size()) != n) {
                    gauto = fail_result({a, b, 0}, "gyr[" + std::to_string(a) + "," +
                                                       std::to_string(b) + "] is not a bijection");
                    break;
                }
                for (int x = 0; x < n && gauto.passed(); ++x)
                    for (int y = 0; y < n; ++y) {
                        if (img[table[x][y]] != table[img[x]][img[y]]) {
                            gauto = fail_result(
                                {a, b, x},
                                "gyr" + tuple_str({a, b}) + " not a homomorphism at " +
                                    tuple_str({x, y}));
                            break;
                        }
                    }
            }
        }
    }
    report.axiom_results.emplace_back(Axiom::gyr_automorphism, gauto);

    // G4 (left loop property): gyr[a,b] = gyr[a+b, b].
    CheckResult g4 = gyr_ready ? pass_result() : skipped_result(not_ready);
    if (gyr_ready) {
        for (int a = 0; a < n && g4.passed(); ++a)
            for (int b = 0; b < n && g4.passed(); ++b) {
                const auto& lhs = gyr_at(a, b);
                const auto& rhs = gyr_at(table[a][b], b);
                for (int c = 0; c < n; ++c)
                    if (lhs[c] != rhs[c]) {
                        g4 = fail_result({a, b, c}, "gyr" + tuple_str({a, b}) + " != gyr" +
                                                        tuple_str({table[a][b], b}));
                        break;
                    }
            }
    }
    report.axiom_results.emplace_back(Axiom::g4, g4);

    // Derived properties: reported, never failing the table.
    {
        CheckResult two_id = entries_ok ? pass_result() : skipped_result("entries out of range");
        if (entries_ok) {
            for (int a = 0; a < n; ++a)
                if (table[a][identity] != a) {
                    two_id = fail_result({a, identity, table[a][identity]},
                                         "a+0 != a at a=" + std::to_string(a));
                    break;
                }
        }
        report.derived_properties.emplace_back(DerivedProperty::two_sided_identity, two_id);

        CheckResult two_inv = gyr_ready ? pass_result() : skipped_result(not_ready);
        if (gyr_ready) {
            for (int a = 0; a < n; ++a) {
                const int inv = raw_left_inverses(table, a, identity)[0];
                if (table[a][inv] != identity) {
                    two_inv = fail_result({a, inv, table[a][inv]},
                                          "a+(-a) != 0 at a=" + std::to_string(a));
                    break;
                }
            }
        }
        report.derived_properties.emplace_back(DerivedProperty::two_sided_inverse, two_inv);

        CheckResult gaa = gyr_ready ? pass_result() : skipped_result(not_ready);
        if (gyr_ready) {
            for (int a = 0; a < n; ++a)
                if (!is_identity_map(gyr_at(a, a))) {
                    gaa = fail_result({a, a, 0}, "gyr[a,a] != id at a=" + std::to_string(a));
                    break;
                }
        }
        report.derived_properties.emplace_back(DerivedProperty::gyr_aa_identity, gaa);

        CheckResult g0b = gyr_ready ? pass_result() : skipped_result(not_ready);
        if (gyr_ready) {
            for (int b = 0; b < n; ++b)
                if (!is_identity_map(gyr_at(identity, b))) {
                    g0b = fail_result({identity, b, 0}, "gyr[0,b] != id at b=" + std::to_string(b));
                    break;
                }
        }
        report.derived_properties.emplace_back(DerivedProperty::gyr_0b_identity, g0b);
    }

    return report;
}

GyroGroup::GyroGroup(std::string name, std::vector<std::vector<int>> table, int identity,
                     std::vector<std::string> labels)
    : name_(std::move(name)),
      order_(static_cast<int>(table.size())),
      identity_(identity),
      labels_(std::move(labels)),
      table_(std::move(table)) {
    if (order_ == 0) throw argument_error("empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != order_) throw argument_error("table is not square");
        for (int v : row)
            if (v < 0 || v >= order_) throw argument_error("table entry out of range");
    }
    if (identity_ < 0 || identity_ >= order_) throw argument_error("identity out of range");
    if (labels_.empty()) {
        labels_.reserve(order_);
        for (int i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != order_)
        throw argument_error("label count differs from order");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != order_)
        throw argument_error("labels are not distinct");
}

GyroGroup GyroGroup::checked(std::string name, std::vector<std::vector<int>> table, int identity,
                             std::vector<std::string> labels) {
    GyroGroup g(std::move(name), std::move(table), identity, std::move(labels));
    ValidationReport report = validate(g.table_, g.identity_);
    if (!report.passed())
        throw structure_error("table '" + g.name_ + "' is not a gyro-group:\n" + report.summary());
    return g;
}

GyroGroup GyroGroup::unchecked(std::string name, std::vector<std::vector<int>> table, int identity,
                               std::vector<std::string> labels) {
    return GyroGroup(std::move(name), std::move(table), identity, std::move(labels));
}

const std::string& GyroGroup::label(int a) const {
    if (a < 0 || a >= order_) throw argument_error("element out of range");
    return labels_[a];
}

int GyroGroup::oplus(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_)
        throw argument_error("element out of range in oplus");
    return table_[a][b];
}

int GyroGroup::element_of(const std::string& label) const {
    for (int i = 0; i < order_; ++i)
        if (labels_[i] == label) return i;
    throw argument_error("unknown element label '" + label + "' in " + name_);
}

int left_inverse(const GyroGroup& g, int a) {
    if (a < 0 || a >= g.order()) throw argument_error("element out of range");
    int found = -1;
    for (int b = 0; b < g.order(); ++b) {
        if (g.table()[b][a] == g.identity()) {
            if (found >= 0)
                throw structure_error("multiple left inverses for " + std::to_string(a));
            found = b;
        }
    }
    if (found < 0) throw structure_error("no left inverse for " + std::to_string(a));
    return found;
}

Permutation gyration(const GyroGroup& g, int a, int b) {
    const int n = g.order();
    const int w = left_inverse(g, g.oplus(a, b));
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = g.oplus(w, g.oplus(a, g.oplus(b, c)));
    return Permutation(std::move(img));
}

std::vector<int> cyclic_subgyrogroup(const GyroGroup& g, int s) {
    if (s < 0 || s >= g.order()) throw argument_error("element out of range");
    std::vector<int> orbit{g.identity()};
    int x = g.oplus(s, g.identity());
    while (x != g.identity()) {
        if (static_cast<int>(orbit.size()) >= g.order())
            throw structure_error("left translation by " + std::to_string(s) +
                                  " is not a permutation");
        orbit.push_back(x);
        x = g.oplus(s, x);
    }
    return orbit;
}

int order_of(const GyroGroup& g, int s) {
    return static_cast<int>(cyclic_subgyrogroup(g, s).size());
}

namespace {

std::vector<int> generated_closure(const GyroGroup& g, const std::vector<int>& gens, bool left) {
    if (gens.empty()) throw argument_error("empty generator set");
    std::vector<char> in(g.order(), 0);
    std::vector<int> work;
    for (int s : gens) {
        if (s < 0 || s >= g.order()) throw argument_error("generator out of range");
        if (!in[s]) {
            in[s] = 1;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        for (int s : gens) {
            const int y = left ? g.oplus(s, x) : g.oplus(x, s);
            if (!in[y]) {
                in[y] = 1;
                work.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

}  // namespace

std::vector<int> left_generated(const GyroGroup& g, const std::vector<int>& gens) {
    return generated_closure(g, gens, true);
}

std::vector<int> right_generated(const GyroGroup& g, const std::vector<int>& gens) {
    return generated_closure(g, gens, false);
}

bool is_gyrocommutative(const GyroGroup& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.oplus(a, b) != gyration(g, a, b)(g.oplus(b, a))) return false;
    return true;
}

bool has_skew_left_loop(const GyroGroup& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (gyration(g, g.oplus(a, b), left_inverse(g, b)) != gyration(g, a, b)) return false;
    return true;
}

bool is_L_subgyrogroup(const GyroGroup& g, const std::vector<int>& sub) {
    std::set<int> h(sub.begin(), sub.end());
    if (h.empty() || !h.count(g.identity()))
        throw argument_error("subset does not contain the identity");
    for (int a : h) {
        if (a < 0 || a >= g.order()) throw argument_error("subset element out of range");
        if (!h.count(left_inverse(g, a)))
            throw argument_error("subset not closed under left inverse");
        for (int b : h)
            if (!h.count(g.oplus(a, b))) throw argument_error("subset not closed under oplus");
    }
    for (int a = 0; a < g.order(); ++a) {
        for (int x : h) {
            const Permutation gy = gyration(g, a, x);
            for (int b : h)
                if (!h.count(gy(b))) return false;
        }
    }
    return true;
}

}  // namespace gyro
