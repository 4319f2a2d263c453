#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramanujan/bounds.hpp"
#include "ramanujan/errors.hpp"
#include "ramanujan/generator.hpp"
#include "ramanujan/prime_table.hpp"
#include "ramanujan/rational.hpp"
#include "ramanujan/reports.hpp"
#include "ramanujan/stats.hpp"

namespace {

using namespace ramanujan;

std::string real_str(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

void print_generate(const RamanujanList& list, const std::string& format) {
    if (format == "plain") {
        for (std::size_t i = 0; i < list.values.size(); ++i)
            std::cout << (i ? " " : "") << list.values[i];
        std::cout << '\n';
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < list.values.size(); ++i)
            std::cout << i + 1 << ',' << list.values[i] << '\n';
    } else {
        std::cout << "{\n  \"c\": \"" << list.c.str() << "\",\n"
                  << "  \"semantics\": \""
                  << (list.semantics == SweepSemantics::integer_sweep
                          ? "integer-sweep"
                          : "strict-real")
                  << "\",\n  \"horizon\": " << list.horizon
                  << ",\n  \"values\": [";
        for (std::size_t i = 0; i < list.values.size(); ++i)
            std::cout << (i ? ", " : "") << list.values[i];
        std::cout << "]\n}\n";
    }
}

int run_verify(RationalC c, const std::string& path, std::uint64_t n,
               TablePool& pool) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open b-file: " << path << '\n';
        return 2;
    }
    std::string content((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
    ReferenceSequence ref = parse_bfile(content, path);
    RamanujanList list = generate(c, n, pool);
    if (auto mismatch = compare_sequences(list, ref, n)) {
        std::cout << "mismatch at index " << mismatch->index << ": computed "
                  << mismatch->computed << ", reference " << mismatch->reference
                  << '\n';
        return 1;
    }
    std::cout << "ok: first " << n << " terms match " << path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-Ramanujan prime generator and reports"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t mem_cap = SieveOptions{}.memory_cap_bytes;
    app.add_option("--mem-cap", mem_cap,
                   "memory cap in bytes for prime tables")
        ->envname("RAMANUJAN_MEM_CAP");

    std::string c_text, bfile_path;
    std::string format = "plain";
    std::string grid_text = "0.05:0.90:0.05";
    std::uint64_t n_terms = 0, limit = 1'000'000, sieve_cap = 0;
    std::uint64_t lo = 100'000, hi = 1'000'000;
    bool strict = false;

    CLI::App* gen = app.add_subcommand(
        "generate", "first n terms of the c-Ramanujan sequence");
    gen->add_option("--c", c_text, "ratio in (0,1), as a/b or decimal")
        ->required();
    gen->add_option("--n", n_terms, "number of terms")->required();
    gen->add_option("--limit", sieve_cap,
                    "cap on how far the sieve may extend (0 = default)");
    gen->add_flag("--strict-real-x", strict,
                  "use the strict real-x reading of the definition");
    gen->add_option("--format", format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    CLI::App* dens = app.add_subcommand(
        "density", "density of c-Ramanujan primes below a limit");
    dens->add_option("--c", c_text)->required();
    dens->add_option("--limit", limit, "count below this value");

    CLI::App* runs = app.add_subcommand(
        "runs", "longest runs among primes in (lo, hi)");
    runs->add_option("--c", c_text)->required();
    runs->add_option("--lo", lo);
    runs->add_option("--hi", hi);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "certified upper bound for the n-th term");
    bounds->add_option("--c", c_text)->required();
    bounds->add_option("--n", n_terms)->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "compare generated terms against an OEIS b-file");
    verify->add_option("--c", c_text)->required();
    verify->add_option("--bfile", bfile_path, "b-file path")->required();
    verify->add_option("--n", n_terms, "terms to compare")->required();

    CLI::App* table1 = app.add_subcommand(
        "table1", "density table over a grid of c values");
    table1->add_option("--grid", grid_text, "lo:hi:step");
    table1->add_option("--limit", limit);
    table1->add_option("--format", format)
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    CLI::App* table2 = app.add_subcommand(
        "table2", "longest-run table over a grid of c values");
    table2->add_option("--grid", grid_text, "lo:hi:step");
    table2->add_option("--lo", lo);
    table2->add_option("--hi", hi);
    table2->add_option("--format", format)
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SieveOptions opts;
    opts.memory_cap_bytes = mem_cap;
    opts.max_limit = sieve_cap;
    TablePool pool(opts);

    try {
        if (gen->parsed()) {
            RationalC c = RationalC::parse(c_text);
            RamanujanList list =
                generate(c, n_terms, pool,
                         strict ? SweepSemantics::strict_real
                                : SweepSemantics::integer_sweep);
            print_generate(list, format);
        } else if (dens->parsed()) {
            RationalC c = RationalC::parse(c_text);
            RamanujanList list = generate_through_value(c, limit, pool);
            auto table = pool.at_least(limit);
            DensityReport r = density(list, *table, limit);
            std::cout << "c " << r.c.str() << "\nlimit " << r.limit
                      << "\npi_c " << r.pi_c << "\npi " << r.pi
                      << "\nactual_density " << format_fixed(r.actual_density, 4)
                      << "\nexpected_density "
                      << format_fixed(r.expected_density, 4) << "\nratio_last "
                      << format_fixed(r.ratio_last, 4) << '\n';
        } else if (runs->parsed()) {
            RationalC c = RationalC::parse(c_text);
            RamanujanList list = generate_through_value(c, hi, pool);
            auto table = pool.at_least(hi);
            RunReport r = run_report(*table, list, lo, hi);
            std::cout << "c " << r.c.str() << "\ninterval (" << r.lo << ", "
                      << r.hi << ")\nprimes " << r.N << "\nfraction "
                      << format_fixed(r.P, 4) << "\nlongest_ram_actual "
                      << r.longest_ram_actual << "\nlongest_ram_expected "
                      << format_fixed(r.longest_ram_expected, 4)
                      << "\nlongest_nonram_actual " << r.longest_nonram_actual
                      << "\nlongest_nonram_expected "
                      << format_fixed(r.longest_nonram_expected, 4)
                      << "\nvariance_ram " << format_fixed(r.variance_ram, 4)
                      << "\nvariance_nonram "
                      << format_fixed(r.variance_nonram, 4) << '\n';
        } else if (bounds->parsed()) {
            RationalC c = RationalC::parse(c_text);
            BoundCertificate cert = upper_bound(c, n_terms, pool);
            std::cout << "c " << cert.c.str() << "\nn " << cert.n
                      << "\nmethod "
                      << (cert.method == BoundCertificate::Method::analytic_f
                              ? "analytic-f"
                              : "p3n-fallback")
                      << "\nx0 " << cert.x0 << "\nA " << real_str(cert.A)
                      << "\nu_c " << real_str(cert.u_c) << "\nM_c "
                      << real_str(cert.M_c) << '\n';
        } else if (verify->parsed()) {
            return run_verify(RationalC::parse(c_text), bfile_path, n_terms,
                              pool);
        } else if (table1->parsed()) {
            std::cout << emit_table1(parse_grid(grid_text), limit,
                                     format == "json" ? TableFormat::json
                                                      : TableFormat::csv,
                                     pool);
        } else if (table2->parsed()) {
            std::cout << emit_table2(parse_grid(grid_text), lo, hi,
                                     format == "json" ? TableFormat::json
                                                      : TableFormat::csv,
                                     pool);
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
