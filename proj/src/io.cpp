#include "epistoch/io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "epistoch/errors.hpp"

namespace epistoch {

long days_from_civil(int year, int month, int day) {
    year -= month <= 2;
    const long era = (year >= 0 ? year : year - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(year - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
        static_cast<unsigned>(day) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097L + static_cast<long>(doe) - 719468L;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

long long parse_count(const std::string& s, std::size_t line) {
    if (s.empty()) throw ParseError("empty case count", line);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw ParseError("case count is not an integer: '" + s + "'", line);
    if (v < 0) throw ParseError("negative case count", line);
    return v;
}

long long parse_day_index(const std::string& s, std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0' || s.empty())
        throw ParseError("day index is not an integer: '" + s + "'", line);
    if (v < 0) throw ParseError("negative day index", line);
    return v;
}

bool leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

long parse_iso_date(const std::string& s, std::size_t line) {
    int y = 0, m = 0, d = 0;
    char extra = '\0';
    if (std::sscanf(s.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &extra) != 3 || s.size() != 10)
        throw ParseError("date is not ISO-8601 (YYYY-MM-DD): '" + s + "'", line);
    static const int month_len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m < 1 || m > 12) throw ParseError("month out of range: '" + s + "'", line);
    const int max_day = month_len[m - 1] + ((m == 2 && leap_year(y)) ? 1 : 0);
    if (d < 1 || d > max_day) throw ParseError("day of month out of range: '" + s + "'", line);
    return days_from_civil(y, m, d);
}

}  // namespace

IncidenceSeries parse_incidence_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);

    std::string line;
    std::size_t line_no = 0;
    bool by_date = false;
    bool header_seen = false;

    // day index -> incident count, collected first so gaps can be filled
    std::vector<std::pair<long long, long long>> entries;
    long first_epoch_day = 0;
    long prev_epoch_day = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        const auto fields = split_fields(t);
        if (!header_seen) {
            if (fields.size() != 2 || fields[1] != "cases" ||
                (fields[0] != "day" && fields[0] != "date"))
                throw ParseError("header must be 'day,cases' or 'date,cases'", line_no);
            by_date = fields[0] == "date";
            header_seen = true;
            continue;
        }
        if (fields.size() != 2) throw ParseError("expected exactly 2 fields", line_no);
        const long long count = parse_count(fields[1], line_no);
        long long day;
        if (by_date) {
            const long epoch = parse_iso_date(fields[0], line_no);
            if (entries.empty()) {
                first_epoch_day = epoch;
            } else if (epoch <= prev_epoch_day) {
                throw ParseError("dates must be strictly increasing", line_no);
            }
            prev_epoch_day = epoch;
            day = epoch - first_epoch_day;
        } else {
            day = parse_day_index(fields[0], line_no);
            if (!entries.empty() && day <= entries.back().first)
                throw ParseError("day indices must be strictly increasing", line_no);
        }
        entries.push_back({day, count});
    }
    if (!header_seen) throw ParseError("missing header", line_no);
    if (entries.empty()) throw ParseError("no data rows", line_no);

    std::vector<double> incident(static_cast<std::size_t>(entries.back().first) + 1, 0.0);
    for (const auto& [day, count] : entries)
        incident[static_cast<std::size_t>(day)] = static_cast<double>(count);
    return IncidenceSeries::from_incident(std::move(incident));
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    if (!table.comment.empty()) out << "# " << table.comment << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

CsvTable read_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        const auto fields = split_fields(t);
        if (table.header.empty()) {
            table.header = fields;
            continue;
        }
        if (fields.size() != table.header.size())
            throw ParseError("expected " + std::to_string(table.header.size()) +
                                 " fields, got " + std::to_string(fields.size()),
                             line_no);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            errno = 0;
            char* end = nullptr;
            const double v = std::strtod(f.c_str(), &end);
            if (end == f.c_str() || *end != '\0')
                throw ParseError("not a number: '" + f + "'", line_no);
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw ParseError("missing header", line_no);
    return table;
}

}  // namespace epistoch
