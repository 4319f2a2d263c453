#include "ramanujan/reports.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ramanujan/bounds.hpp"
#include "ramanujan/errors.hpp"
#include "ramanujan/stats.hpp"

namespace ramanujan {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Runs one job per grid row on worker threads (rows are independent; the
// pool hands all of them the same immutable table) and returns results in
// grid order.  Failures are re-thrown tagged with the offending row's c.
template <typename Fn>
auto per_row(const std::vector<RationalC>& grid, Fn fn)
    -> std::vector<decltype(fn(grid[0]))> {
    std::vector<std::future<decltype(fn(grid[0]))>> futures;
    futures.reserve(grid.size());
    for (const RationalC& c : grid)
        futures.push_back(std::async(std::launch::async, [fn, c] {
            try {
                return fn(c);
            } catch (const resource_limit_error& e) {
                throw resource_limit_error("row c=" + c.str() + ": " + e.what());
            } catch (const std::out_of_range& e) {
                throw std::out_of_range("row c=" + c.str() + ": " + e.what());
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("row c=" + c.str() + ": " +
                                            e.what());
            }
        }));
    std::vector<decltype(fn(grid[0]))> rows;
    rows.reserve(grid.size());
    for (auto& f : futures) rows.push_back(f.get());
    return rows;
}

}  // namespace

ReferenceSequence parse_bfile(std::string_view content, std::string name) {
    ReferenceSequence seq;
    seq.name = std::move(name);
    std::size_t line_no = 0, pos = 0;
    bool have_prev = false;
    std::uint64_t prev_index = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        std::string_view line = content.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields[0].front() == '#') continue;
        if (fields.size() != 2)
            throw std::invalid_argument("b-file line " +
                                        std::to_string(line_no) +
                                        ": expected \"index value\"");
        std::uint64_t index;
        long long value;
        auto ri = std::from_chars(fields[0].data(),
                                  fields[0].data() + fields[0].size(), index);
        auto rv = std::from_chars(fields[1].data(),
                                  fields[1].data() + fields[1].size(), value);
        if (ri.ec != std::errc{} || ri.ptr != fields[0].data() + fields[0].size() ||
            rv.ec != std::errc{} || rv.ptr != fields[1].data() + fields[1].size())
            throw std::invalid_argument("b-file line " +
                                        std::to_string(line_no) +
                                        ": malformed number");
        if (have_prev && index <= prev_index)
            throw std::invalid_argument("b-file line " +
                                        std::to_string(line_no) +
                                        ": index " + std::to_string(index) +
                                        " does not increase");
        prev_index = index;
        have_prev = true;
        seq.entries.emplace_back(index, value);
    }
    return seq;
}

std::optional<SequenceMismatch> compare_sequences(
    const RamanujanList& computed, const ReferenceSequence& reference,
    std::uint64_t n_limit) {
    if (computed.n_max() < n_limit)
        throw std::invalid_argument(
            "computed list has " + std::to_string(computed.n_max()) +
            " terms, fewer than the requested " + std::to_string(n_limit));
    std::vector<long long> ref(n_limit);
    std::vector<bool> seen(n_limit, false);
    for (const auto& [index, value] : reference.entries)
        if (index >= 1 && index <= n_limit) {
            ref[index - 1] = value;
            seen[index - 1] = true;
        }
    for (std::uint64_t i = 0; i < n_limit; ++i)
        if (!seen[i])
            throw std::invalid_argument(
                "reference sequence " + reference.name + " is missing index " +
                std::to_string(i + 1));
    for (std::uint64_t i = 0; i < n_limit; ++i) {
        long long cv = static_cast<long long>(computed.values[i]);
        if (cv != ref[i])
            return SequenceMismatch{i + 1, computed.values[i], ref[i]};
    }
    return std::nullopt;
}

std::string format_fixed(double v, int digits) {
    long long scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    long long scaled = std::llround(v * static_cast<double>(scale));
    bool neg = scaled < 0;
    unsigned long long mag = neg ? -(unsigned long long)scaled : scaled;
    std::string out = (neg ? "-" : "") + std::to_string(mag / scale);
    if (digits > 0) {
        std::string frac = std::to_string(mag % scale);
        frac.insert(frac.begin(), digits - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

std::string emit_table1(const std::vector<RationalC>& grid,
                        std::uint64_t limit, TableFormat format,
                        TablePool& pool) {
    if (grid.empty()) throw std::invalid_argument("empty grid");
    auto table = pool.at_least(limit);
    auto rows = per_row(grid, [&](RationalC c) {
        RamanujanList list = generate_through_value(c, limit, pool);
        return density(list, *table, limit);
    });

    if (format == TableFormat::csv) {
        std::ostringstream out;
        out << "c,expected_density,actual_density,ratio\n";
        for (const DensityReport& r : rows)
            out << format_fixed(r.c.value(), 2) << ','
                << format_fixed(r.expected_density, 4) << ','
                << format_fixed(r.actual_density, 4) << ','
                << format_fixed(r.ratio_last, 4) << '\n';
        return out.str();
    }
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const DensityReport& r : rows) {
        ordered_json row;
        row["c"] = format_fixed(r.c.value(), 2);
        row["c_fraction"] = r.c.str();
        row["expected_density"] = format_fixed(r.expected_density, 4);
        row["actual_density"] = format_fixed(r.actual_density, 4);
        row["ratio"] = format_fixed(r.ratio_last, 4);
        row["raw"] = {{"expected_density", r.expected_density},
                      {"actual_density", r.actual_density},
                      {"ratio", r.ratio_last},
                      {"pi_c", r.pi_c},
                      {"pi", r.pi}};
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string emit_table2(const std::vector<RationalC>& grid, std::uint64_t lo,
                        std::uint64_t hi, TableFormat format,
                        TablePool& pool) {
    if (grid.empty()) throw std::invalid_argument("empty grid");
    if (lo >= hi) throw std::invalid_argument("need lo < hi");
    auto table = pool.at_least(hi);
    auto rows = per_row(grid, [&](RationalC c) {
        RamanujanList list = generate_through_value(c, hi, pool);
        return run_report(*table, list, lo, hi);
    });

    if (format == TableFormat::csv) {
        std::ostringstream out;
        out << "c,expected_ram,actual_ram,expected_nonram,actual_nonram\n";
        for (const RunReport& r : rows)
            out << format_fixed(r.c.value(), 2) << ','
                << std::llround(r.longest_ram_expected) << ','
                << r.longest_ram_actual << ','
                << std::llround(r.longest_nonram_expected) << ','
                << r.longest_nonram_actual << '\n';
        return out.str();
    }
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const RunReport& r : rows) {
        ordered_json row;
        row["c"] = format_fixed(r.c.value(), 2);
        row["c_fraction"] = r.c.str();
        row["expected_ram"] = std::llround(r.longest_ram_expected);
        row["actual_ram"] = r.longest_ram_actual;
        row["expected_nonram"] = std::llround(r.longest_nonram_expected);
        row["actual_nonram"] = r.longest_nonram_actual;
        row["raw"] = {{"N", r.N},
                      {"P", r.P},
                      {"expected_ram", r.longest_ram_expected},
                      {"expected_nonram", r.longest_nonram_expected},
                      {"variance_ram", r.variance_ram},
                      {"variance_nonram", r.variance_nonram}};
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::vector<RationalC> parse_grid(std::string_view text) {
    auto first = text.find(':');
    auto last = text.rfind(':');
    if (first == std::string_view::npos || first == last)
        throw std::invalid_argument("grid must be lo:hi:step, got '" +
                                    std::string(text) + "'");
    RationalC lo = RationalC::parse(text.substr(0, first));
    RationalC hi = RationalC::parse(text.substr(first + 1, last - first - 1));
    RationalC step = RationalC::parse(text.substr(last + 1));

    // Walk lo, lo+step, ... <= hi exactly over a common denominator.
    std::uint64_t g = std::gcd(lo.denominator(), step.denominator());
    std::uint64_t den = lo.denominator() / g * step.denominator();
    if (den > 1'000'000'000'000ull)
        throw std::invalid_argument("grid denominators too fine");
    std::uint64_t n_lo = lo.numerator() * (den / lo.denominator());
    std::uint64_t n_step = step.numerator() * (den / step.denominator());
    std::vector<RationalC> grid;
    for (std::uint64_t num = n_lo;
         static_cast<unsigned __int128>(num) * hi.denominator() <=
         static_cast<unsigned __int128>(hi.numerator()) * den;
         num += n_step) {
        grid.push_back(RationalC(num, den));
        if (grid.size() > 10000)
            throw std::invalid_argument("grid has more than 10000 points");
    }
    if (grid.empty())
        throw std::invalid_argument("grid expands to no points");
    return grid;
}

}  // namespace ramanujan
