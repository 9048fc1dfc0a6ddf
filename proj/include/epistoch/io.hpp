#pragma once

#include <string>
#include <vector>

#include "epistoch/estimation.hpp"

namespace epistoch {

// Reads a daily case-count file. Header is either `day,cases` (non-negative
// integer day index) or `date,cases` (ISO-8601 dates mapped to 0-based day
// offsets from the first data row). Days absent from the file contribute 0
// incident cases. Lines starting with '#' are comments. Negative or
// non-integer counts, duplicate days, and non-increasing dates raise
// ParseError with the offending line number.
IncidenceSeries parse_incidence_csv(const std::string& path);

// Tabular output: header cells are plain strings, data cells are written with
// printf %.17g so that reading the file back reproduces the exact doubles.
// A non-empty comment is emitted as a leading '#' line and ignored on read.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::string comment;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_numeric_csv(const std::string& path);

// 1970-01-01 epoch day count for a calendar date (proleptic Gregorian).
long days_from_civil(int year, int month, int day);

}  // namespace epistoch
