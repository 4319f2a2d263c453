#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramanujan/generator.hpp"
#include "ramanujan/prime_table.hpp"
#include "ramanujan/rational.hpp"

namespace ramanujan {

// A sequence loaded from an OEIS-style b-file: "index value" per line.
struct ReferenceSequence {
    std::string name;
    std::vector<std::pair<std::uint64_t, long long>> entries;
};

// Parses b-file text: blank lines and '#' comments are skipped; every other
// line must be "<index> <value>".  Throws std::invalid_argument with the
// line number on malformed lines, and on indices that fail to increase.
ReferenceSequence parse_bfile(std::string_view content,
                              std::string name = "");

struct SequenceMismatch {
    std::uint64_t index;  // 1-based term number
    std::uint64_t computed;
    long long reference;
};

// First differing term over indices 1..n_limit, or nullopt if they agree.
// Both sides must cover that range; the error says which one is short.
std::optional<SequenceMismatch> compare_sequences(
    const RamanujanList& computed, const ReferenceSequence& reference,
    std::uint64_t n_limit);

enum class TableFormat { csv, json };

// Density table over the grid: columns c, expected_density, actual_density,
// ratio; four decimals, half-up.  JSON carries the same rows plus raw values.
std::string emit_table1(const std::vector<RationalC>& grid,
                        std::uint64_t limit, TableFormat format,
                        TablePool& pool);

// Longest-run table over the grid for the interval (lo, hi): columns c,
// expected_ram, actual_ram, expected_nonram, actual_nonram with expected
// values rounded to integers; JSON adds raw expectations and variances.
std::string emit_table2(const std::vector<RationalC>& grid, std::uint64_t lo,
                        std::uint64_t hi, TableFormat format, TablePool& pool);

// Fixed-point with half-up rounding, e.g. format_fixed(1.06811, 4) ->
// "1.0681".
std::string format_fixed(double v, int digits);

// "lo:hi:step" with decimal or a/b components, expanded exactly; every grid
// point must land in (0,1).
std::vector<RationalC> parse_grid(std::string_view text);

}  // namespace ramanujan
