// Embedded classification dataset: the 50 known families of Picard-rank-one
// Calabi-Yau threefolds carrying an involution that negates the 3-form and
// fixes a surface, keyed by the quotient type, with validators for the row
// identities, the global sharp bounds and the structural facts the dataset
// is expected to satisfy.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycalc/rational.hpp"

namespace cycalc {

enum class Family { smooth_fano, fano_enriques, index_half, p1112 };

Family family_from_string(const std::string& name);
std::string to_string(Family f);

struct EulerValue {
    long long value = 0;
    bool starred = false;  // example known, other Euler characteristics possible
};

struct TableRow {
    Family family = Family::smooth_fano;
    long long N = 0;
    long long s = 0;
    long long h3 = 0;
    long long hc2 = 0;
    std::vector<EulerValue> e_values;  // empty = no example known
    std::string refs;
};

struct FanoEulerEntry {
    Family family = Family::smooth_fano;
    long long N = 0, s = 0, h3 = 0;
    Rational euler_Y;
};

// Raw bytes of the embedded fixtures (identical to the files under data/).
const std::string& dataset_tsv();
const std::string& fano_euler_tsv();

std::vector<TableRow> parse_dataset_tsv(const std::string& tsv);
std::string render_dataset_tsv(const std::vector<TableRow>& rows);
std::vector<FanoEulerEntry> parse_fano_euler_tsv(const std::string& tsv);

// Embedded dataset, checksum-verified; CYCALC_DATASET overrides with an
// external file (parsed and validated, but exempt from the byte checksum).
std::vector<TableRow> load_dataset();
std::vector<FanoEulerEntry> load_fano_euler();

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;  // row descriptors / missing extremes
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

// Runs every dataset check: the H.c2 identity on each row, global bounds
// and their sharpness, Euler reconstruction of every unstarred e value,
// per-family invariants, integrality consistency of starred values (with
// the one historical anomaly expected), and the mod-4 regularity of the
// index-(1/2) block.  Failures are report entries, never exceptions.
ValidationReport validate_all(const std::vector<TableRow>& rows,
                              const std::vector<FanoEulerEntry>& euler_fixture);
ValidationReport validate_all(const std::vector<TableRow>& rows);

struct QueryFilter {
    std::optional<Family> family;
    std::optional<long long> N;
    std::optional<long long> s;
    std::optional<long long> h3_min, h3_max;
    std::optional<long long> hc2_min, hc2_max;
};

// Stable order (family, N, s, h3); empty result is valid; malformed ranges
// (min > max) are errors.
std::vector<TableRow> query(const std::vector<TableRow>& rows, const QueryFilter& filter);

// e(S) for the branch surface in |s H'| of the row's quotient model.
Rational row_branch_surface_euler(const TableRow& row);

// Consistency status of one tabulated e value: the implied e(Y) from
// e = 2e(Y) - e(S) - N must be an integer.
bool euler_value_consistent(const TableRow& row, long long e_value);

uint64_t fnv1a64(const std::string& bytes);

}  // namespace cycalc
