#include "seqlat/catalog.hpp"
#include "seqlat/lattice.hpp"
#include "seqlat/oeis.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>

using namespace seqlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNetwork = 3;

enum class Format { Plain, Csv, BFile, JsonLines };

const std::map<std::string, Format> kFormats{{"plain", Format::Plain},
                                             {"csv", Format::Csv},
                                             {"bfile", Format::BFile},
                                             {"json-lines", Format::JsonLines}};

void emit_terms(const std::string& id, const std::vector<Int>& values,
                long lead_offset, Format format) {
    switch (format) {
        case Format::Plain: {
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << (i ? " " : "") << values[i];
            std::cout << "\n";
            break;
        }
        case Format::Csv:
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << lead_offset + static_cast<long>(i) << "," << values[i] << "\n";
            break;
        case Format::BFile:
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << lead_offset + static_cast<long>(i) << " " << values[i] << "\n";
            break;
        case Format::JsonLines:
            for (std::size_t i = 0; i < values.size(); ++i) {
                nlohmann::json line{{"id", id},
                                    {"index", lead_offset + static_cast<long>(i)},
                                    {"value", to_string(values[i])}};
                std::cout << line.dump() << "\n";
            }
            break;
    }
}

int run_terms(const std::string& id, std::size_t count, const std::string& method,
              Format format) {
    const auto& d = descriptor(id);
    if (method == "oracle") {
        emit_terms(id, oracle_terms(id, count), d.lead_offset, format);
        return kExitOk;
    }
    if (method == "gf") {
        emit_terms(id, terms(id, count), d.lead_offset, format);
        return kExitOk;
    }
    // both: two columns, nonzero exit on any disagreement
    auto gf = terms(id, count);
    auto dp = oracle_terms(id, count);
    const char sep = format == Format::Csv ? ',' : ' ';
    bool agree = true;
    for (std::size_t i = 0; i < count; ++i) {
        std::cout << gf[i] << sep << dp[i] << "\n";
        if (gf[i] != dp[i]) agree = false;
    }
    return agree ? kExitOk : kExitVerifyFailed;
}

int run_triangle(const std::string& id, std::size_t rows) {
    const auto& d = descriptor(id);
    if (d.kind != SequenceKind::Triangle) {
        std::cerr << id << " is not a triangle sequence\n";
        return kExitUsage;
    }
    for (std::size_t n = 0; n < rows; ++n) {
        auto row = triangle_row(id, n);
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? " " : "") << row[k];
        std::cout << "\n";
    }
    return kExitOk;
}

class VerifyReport {
public:
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        all_ok_ &= ok;
    }
    bool all_ok() const { return all_ok_; }

private:
    bool all_ok_ = true;
};

void verify_identities(VerifyReport& report, std::size_t order) {
    KernelSet k(order);
    const auto one = TruncatedSeries::one(order);
    const auto zero = TruncatedSeries::zero(order);
    report.check("catalan functional equation x*C^2 - C + 1 = 0",
                 shift(k.catalan() * k.catalan(), 1) - k.catalan() + one == zero);
    report.check("schroeder functional equation x*S^2 - (1-x)*S + 1 = 0",
                 shift(k.schroeder() * k.schroeder(), 1) -
                         TruncatedSeries::one_minus_x(order) * k.schroeder() + one ==
                     zero);
    auto via_sum = reciprocal(one - shift(k.catalan() + k.schroeder() + one, 1));
    auto via_product =
        k.schroeder() * reciprocal(one - shift(k.catalan() * k.schroeder(), 1));
    report.check("both algebraic forms of F agree", via_sum == via_product);
    auto inv_1mx = reciprocal(TruncatedSeries::one_minus_x(order));
    auto composed = inv_1mx * compose(catalan_series(order + 1),
                                      shift(inv_1mx * inv_1mx, 1));
    report.check("S = 1/(1-x) * C(x/(1-x)^2)", composed == k.schroeder());
}

void verify_lemma_vs_oracle(VerifyReport& report, long max_n) {
    KernelSet kernels(static_cast<std::size_t>(max_n));
    bool ok = true;
    for (auto [family, rule] :
         {std::pair{PathFamily::Catalan, catalan_lattice()},
          std::pair{PathFamily::Schroeder, schroeder_lattice()}}) {
        auto g = grid_counts(rule, static_cast<std::size_t>(max_n),
                             static_cast<std::size_t>(max_n));
        LatticeRule restricted = rule;
        restricted.filter = RegionFilter::AvoidDiagonalInterior;
        for (long n = 0; n <= max_n && ok; ++n)
            for (long k = 0; k <= n && ok; ++k) {
                Int formula = family == PathFamily::Catalan
                                  ? catalan_lattice_count(n, k, kernels)
                                  : schroeder_lattice_count(n, k, kernels);
                ok = formula == g.at(n, k);
                if (ok && (n > k || n >= 1))
                    ok = subdiagonal_count(family, n, k, kernels) ==
                         count_avoiding_diagonal(rule, n, k);
            }
    }
    report.check("lemma path formulas vs restricted DP oracle", ok);
}

void verify_points_vs_oracle(VerifyReport& report, long max_sum) {
    KernelSet kernels(static_cast<std::size_t>(max_sum));
    bool ok = true;
    for (auto [variant, rule] :
         {std::pair{LatticeVariant::CS, cs_lattice()},
          std::pair{LatticeVariant::CS_STAR, cs_star_lattice()}}) {
        auto g = grid_counts(rule, static_cast<std::size_t>(max_sum),
                             static_cast<std::size_t>(max_sum));
        for (long x = 0; x <= max_sum && ok; ++x)
            for (long y = 0; x + y <= max_sum && ok; ++y)
                ok = point_count(variant, x, y, kernels) == g.at(x, y);
    }
    report.check("point-count formulas vs DP oracle", ok);
}

void verify_sequences(VerifyReport& report, const std::vector<std::string>& ids,
                      std::size_t count) {
    for (const auto& id : ids) {
        auto gf = terms(id, count);
        auto dp = oracle_terms(id, count);
        std::string detail;
        for (std::size_t i = 0; i < count; ++i)
            if (gf[i] != dp[i]) {
                detail = "first mismatch at term " + std::to_string(i);
                break;
            }
        report.check(id + " recipe vs DP oracle (" + std::to_string(count) + " terms)",
                     detail.empty(), detail);
    }
}

int verify_oeis(VerifyReport& report, const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        oeis::BFileRecord record;
        try {
            record = oeis::fetch_bfile(id);
        } catch (const FetchFailed& e) {
            report.check(id + " vs OEIS b-file", false, e.what());
            return kExitNetwork;
        }
        const auto& d = descriptor(id);
        const std::size_t want = std::min<std::size_t>(200, record.entries.size());
        auto diff = oeis::compare(id, terms(id, want), record, d.lead_offset);
        std::string detail;
        if (!diff.ok())
            detail = "mismatch at index " + std::to_string(diff.first_mismatch->index);
        report.check(id + " vs OEIS b-file (" + std::to_string(diff.compared) +
                         " terms, " +
                         (record.source == oeis::Source::Network ? "network" : "cache") +
                         ")",
                     diff.ok(), detail);
    }
    return kExitOk;
}

int run_verify(std::vector<std::string> ids, long max_order, bool with_oeis) {
    if (ids.empty()) ids = all_ids();
    for (const auto& id : ids) descriptor(id);  // fail fast on unknown ids
    VerifyReport report;
    verify_identities(report, static_cast<std::size_t>(max_order));
    verify_lemma_vs_oracle(report, std::min<long>(max_order, 40));
    verify_points_vs_oracle(report, std::min<long>(max_order, 40));
    verify_sequences(report, ids, static_cast<std::size_t>(std::min<long>(max_order, 50)));
    if (with_oeis) {
        if (int rc = verify_oeis(report, ids); rc != kExitOk) return rc;
    }
    return report.all_ok() ? kExitOk : kExitVerifyFailed;
}

int run_bfile(const std::string& id, std::size_t count) {
    const auto& d = descriptor(id);
    emit_terms(id, terms(id, count), d.lead_offset, Format::BFile);
    return kExitOk;
}

int run_bench(std::size_t n) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    };

    auto t0 = clock::now();
    KernelSet kernels(n);
    auto t1 = clock::now();
    std::cout << "kernel construction at order " << n << ": " << ms(t1 - t0) << " ms\n";

    std::size_t peak_bits = 0;
    std::vector<std::string> kimberling;
    for (const auto& id : all_ids())
        if (id != "A000108" && id != "A006318") kimberling.push_back(id);
    for (const auto& id : kimberling) {
        for (const auto& v : terms(id, n)) peak_bits = std::max(peak_bits, bit_length(v));
    }
    auto t2 = clock::now();
    std::cout << kimberling.size() << " sequences, " << n << " terms each: "
              << ms(t2 - t1) << " ms\n";

    const std::size_t side = std::min<std::size_t>(n, 200);
    auto g = grid_counts(cs_star_lattice(), side, side);
    auto t3 = clock::now();
    std::cout << "oracle grid " << side << "x" << side << ": " << ms(t3 - t2) << " ms\n";
    std::cout << "peak term bit length: " << peak_bits << "\n";
    (void)g;
    return kExitOk;
}

int run_oracle(const std::string& lattice, long x, long y, bool avoid_diagonal) {
    const std::map<std::string, LatticeRule> rules{{"c", catalan_lattice()},
                                                   {"s", schroeder_lattice()},
                                                   {"cs", cs_lattice()},
                                                   {"cs-star", cs_star_lattice()}};
    const LatticeRule rule = rules.at(lattice);
    std::cout << (avoid_diagonal ? count_avoiding_diagonal(rule, x, y)
                                 : count(rule, x, y))
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path counts of the Catalan-Schroeder lattices and the OEIS "
                 "sequences A026769-A026790"};
    app.require_subcommand(1);

    std::string id, method = "gf", format_name = "plain", lattice, to;
    std::size_t count = 0, rows = 0, bench_terms = 0;
    long max_order = 30;
    bool with_oeis = false, verify_all = false, avoid_diagonal = false;
    std::vector<std::string> verify_ids;

    auto* terms_cmd = app.add_subcommand("terms", "print terms of a sequence");
    terms_cmd->add_option("id", id, "OEIS id, e.g. A026770")->required();
    terms_cmd->add_option("--count", count, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);
    terms_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"gf", "oracle", "both"}));
    terms_cmd->add_option("--format", format_name)
        ->check(CLI::IsMember({"plain", "csv", "bfile", "json-lines"}));

    auto* triangle_cmd = app.add_subcommand("triangle", "print triangle rows");
    triangle_cmd->add_option("id", id)->required();
    triangle_cmd->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);

    auto* verify_cmd =
        app.add_subcommand("verify", "run the full identity and oracle cross-checks");
    verify_cmd->add_option("ids", verify_ids, "sequence ids (default: all)");
    verify_cmd->add_flag("--all", verify_all, "verify every registered sequence");
    verify_cmd->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--with-oeis", with_oeis, "also diff against OEIS b-files");

    auto* bfile_cmd = app.add_subcommand("bfile", "emit terms in OEIS b-file format");
    bfile_cmd->add_option("id", id)->required();
    bfile_cmd->add_option("--count", count)->required()->check(CLI::PositiveNumber);

    auto* bench_cmd = app.add_subcommand("bench", "time the computation phases");
    bench_cmd->add_option("--terms", bench_terms)->required()->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "DP path count for one point");
    oracle_cmd->add_option("--lattice", lattice)
        ->required()
        ->check(CLI::IsMember({"c", "s", "cs", "cs-star"}));
    oracle_cmd->add_option("--to", to, "target point X,Y")->required();
    oracle_cmd->add_flag("--avoid-diagonal", avoid_diagonal,
                         "count paths touching y=x only at endpoints");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (terms_cmd->parsed()) return run_terms(id, count, method, kFormats.at(format_name));
        if (triangle_cmd->parsed()) return run_triangle(id, rows);
        if (verify_cmd->parsed()) return run_verify(verify_ids, max_order, with_oeis);
        if (bfile_cmd->parsed()) return run_bfile(id, count);
        if (bench_cmd->parsed()) return run_bench(bench_terms);
        if (oracle_cmd->parsed()) {
            auto comma = to.find(',');
            if (comma == std::string::npos) {
                std::cerr << "--to expects X,Y\n";
                return kExitUsage;
            }
            return run_oracle(lattice, std::stol(to.substr(0, comma)),
                              std::stol(to.substr(comma + 1)), avoid_diagonal);
        }
    } catch (const UnknownSequence& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const WrongKind& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const FetchFailed& e) {
        std::cerr << e.what() << "\n";
        return kExitNetwork;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
