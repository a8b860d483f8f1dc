#pragma once

#include <string>
#include <vector>

#include "kummer/components.hpp"

namespace kummer {

struct GridRow {
    Int n, d, t;
    Int count;  // closed form
    Branch branch;
    Int oracle;
    std::vector<Int> classes;  // representatives c, increasing
    bool agree;
};

// Divisors of gcd(2d, 2n+2), increasing: the valid t for fixed (n, d).
std::vector<Int> valid_divisibilities(Int n, Int d);

GridRow make_grid_row(Int n, Int d, Int t);

// Every valid (n, d, t) with 2 <= n <= n_max, 1 <= d <= d_max, ordered by
// n, then d, then t.
std::vector<GridRow> compute_grid(Int n_max, Int d_max);

std::string grid_to_csv(const std::vector<GridRow>& rows);
std::string grid_to_json(const std::vector<GridRow>& rows);

std::string classes_to_text(Int n, Int d, Int t, const std::vector<PairClass>& classes);
std::string classes_to_csv(const std::vector<PairClass>& classes);
std::string classes_to_json(const std::vector<PairClass>& classes);

struct VerifyReport {
    Int rows_checked = 0;
    std::vector<GridRow> mismatches;       // closed form vs counting oracle
    Int geometric_cells = 0;
    std::vector<std::string> geometric_failures;
    std::vector<std::string> notes;        // flagged rows, not failures
    bool ok() const { return mismatches.empty() && geometric_failures.empty(); }
};

// Cross-checks the closed form against the counting oracle on the whole
// grid, and against the geometric classification (enumerated pair lattices
// up to marked isometry) for n, d <= 12. Known-problematic published
// example families are reported as notes.
VerifyReport run_verify(Int n_max, Int d_max);

std::string format_verify_report(const VerifyReport& report);

}  // namespace kummer
