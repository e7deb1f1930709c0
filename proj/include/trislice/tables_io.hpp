#pragma once

#include "trislice/rat.hpp"

#include <string>
#include <vector>

namespace trislice {

/* One exported coefficient: [var^n] of family member k, exact. */
struct TableRow {
    std::string family;
    int k = 0;
    int n = 0;
    Rat value;
};

/* One cell of the enumeration comparison. */
struct OracleRow {
    int F = 0;
    int k = 0;
    long long oracle_count = 0;
    Rat series_count;
    bool match = false;
};

/* One line of the verification report. */
struct ReportRow {
    std::string check;
    bool pass = false;
    std::string detail;
};

// Quotes a CSV field only when it needs it (comma, quote or newline inside).
std::string csv_field(const std::string& raw);

// Coefficient tables: header family,k,n,num,den / array of objects with the
// same keys. Rationals travel as decimal-free numerator and denominator
// strings; indices stay plain integers.
std::string rows_to_csv(const std::vector<TableRow>& rows);
std::string rows_to_json(const std::vector<TableRow>& rows);

// Comparison tables: F,k,oracle_count,series_count,match.
std::string oracle_to_csv(const std::vector<OracleRow>& rows);
std::string oracle_to_json(const std::vector<OracleRow>& rows);

// Verification reports: check,status,detail with status pass|fail.
std::string report_to_csv(const std::vector<ReportRow>& rows);
std::string report_to_json(const std::vector<ReportRow>& rows);

// Whole-file write through a sibling temp file and rename, so the target
// never holds a partial payload. Throws on any I/O failure.
void atomic_write(const std::string& path, const std::string& payload);

}  // namespace trislice
