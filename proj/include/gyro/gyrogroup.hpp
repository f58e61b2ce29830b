#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gyro/permutation.hpp"

namespace gyro {

enum class Axiom {
    rows_latin,
    g1,
    g2,
    g3,
    gyr_automorphism,
    g4,
};

enum class DerivedProperty {
    two_sided_identity,
    two_sided_inverse,
    gyr_aa_identity,   // gyr[a,a] = id
    gyr_0b_identity,   // gyr[0,b] = id
};

std::string to_string(Axiom a);
std::string to_string(DerivedProperty p);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    CheckStatus status = CheckStatus::skipped;
    // Smallest tuple of quantified variables violating the check; the free
    // slots of low-arity checks carry the offending value (see detail).
    std::optional<std::array<int, 3>> witness;
    std::string detail;

    bool passed() const { return status == CheckStatus::pass; }
};

// Structured pass/fail per axiom.  A table passes iff all six axiom checks
// pass; derived properties are reported but never fail the table.
struct ValidationReport {
    int order = 0;
    int identity = 0;
    std::vector<std::pair<Axiom, CheckResult>> axiom_results;
    std::vector<std::pair<DerivedProperty, CheckResult>> derived_properties;

    bool passed() const;
    const CheckResult& axiom(Axiom a) const;
    const CheckResult& derived(DerivedProperty p) const;
    std::string summary() const;
};

// Checks, in order: rows-latin, G1, G2, G3, gyr-automorphism, G4.  The
// gyration used in G3/G4 is computed from the table itself; checks that need
// it are skipped when rows-latin/G1/G2 fail.  Failures are reported, never
// thrown.
ValidationReport validate(const std::vector<std::vector<int>>& table, int identity);

// A finite gyro-group as a validated Cayley table.  Immutable; the single
// source of truth for oplus, left inverses and gyrations.
class GyroGroup {
  public:
    // Validates and constructs; throws structure_error carrying the report
    // summary if validation fails.  Throws argument_error on malformed input
    // (non-square table, out-of-range entries, bad labels).
    static GyroGroup checked(std::string name, std::vector<std::vector<int>> table,
                             int identity = 0, std::vector<std::string> labels = {});

    // Constructs without requiring validation to pass (erratum-tolerant
    // ingestion).  The table must still be square with in-range entries.
    static GyroGroup unchecked(std::string name, std::vector<std::vector<int>> table,
                               int identity = 0, std::vector<std::string> labels = {});

    int order() const { return order_; }
    int identity() const { return identity_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    // a + b by table lookup.
    int oplus(int a, int b) const;

    // Index of the given label; argument_error if unknown.
    int element_of(const std::string& label) const;

  private:
    GyroGroup(std::string name, std::vector<std::vector<int>> table, int identity,
              std::vector<std::string> labels);

    std::string name_;
    int order_;
    int identity_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
};

// The unique b with b + a = 0; structure_error if no or several such b.
int left_inverse(const GyroGroup& g, int a);

// gyr[a,b]: c -> -(a+b) + (a + (b+c)).
Permutation gyration(const GyroGroup& g, int a, int b);

// Orbit of the identity under x -> s+x, in iteration order starting at the
// identity.
std::vector<int> cyclic_subgyrogroup(const GyroGroup& g, int s);

// |<s>|, the length of the identity's cycle under left translation by s.
int order_of(const GyroGroup& g, int s);

// Least fixed point of S under x -> s+x (left) resp. x -> x+s (right).
std::vector<int> left_generated(const GyroGroup& g, const std::vector<int>& gens);
std::vector<int> right_generated(const GyroGroup& g, const std::vector<int>& gens);

// a+b = gyr[a,b](b+a) for all pairs.
bool is_gyrocommutative(const GyroGroup& g);

// gyr[a+b, -b] = gyr[a,b] for all pairs.
bool has_skew_left_loop(const GyroGroup& g);

// H must contain the identity and be closed under oplus and left inverse
// (argument_error otherwise).  True iff gyr[a,h](H) = H setwise for every
// a in G and h in H.
bool is_L_subgyrogroup(const GyroGroup& g, const std::vector<int>& sub);

}  // namespace gyro
