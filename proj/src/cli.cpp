#include "descmat/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "descmat/characters.hpp"
#include "descmat/families.hpp"
#include "descmat/fine_sets.hpp"
#include "descmat/serialize.hpp"
#include "descmat/tableau.hpp"
#include "descmat/verify.hpp"

namespace descmat {

namespace {

struct CommonOpts {
    std::string format;
    std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    cmd->add_option("--out", opts.out_file, "Write output to a file instead of stdout");
}

void deliver(const std::string& text, const CommonOpts& opts, std::ostream& out) {
    if (opts.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opts.out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out_file);
    f << text;
}

// ---- matrix --------------------------------------------------------------

ExactMatrix build_requested(const std::string& family, int n, bool use_explicit,
                            const std::optional<std::string>& x_text) {
    if (family == "MX") {
        if (!x_text) throw CLI::ValidationError("--x", "family MX requires --x");
        BigRational x = parse_rational(*x_text);
        if (!use_explicit) return mx_matrix(n, x);
        if (n > build_cap(Family::AM))
            throw std::domain_error("family MX capped at n = " +
                                    std::to_string(build_cap(Family::AM)));
        std::size_t order = std::size_t{1} << n;
        ExactMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j) {
                Subset I = subset_from_ord(i, n), J = subset_from_ord(j, n);
                m.at(i, j) = x * entry(Family::AM, I, J) + (1 - x) * entry(Family::BM, I, J);
            }
        return m;
    }
    Family f = family_from_string(family);
    return use_explicit ? build_explicit(f, n) : build(f, n);
}

// ---- character tables ----------------------------------------------------

std::vector<std::string> character_columns(int n) {
    std::vector<std::string> cols = {"row"};
    for (const Partition& mu : partitions_of(n)) cols.push_back(mu.to_string());
    return cols;
}

// Rows of the character table for a source, keyed by the row label.
std::vector<std::pair<std::string, std::vector<BigInt>>> character_rows(const std::string& source,
                                                                        int n) {
    std::vector<Partition> parts = partitions_of(n);
    std::vector<std::pair<std::string, std::vector<BigInt>>> rows;
    auto values_for = [&](auto&& value_at_mu) {
        std::vector<BigInt> vals;
        vals.reserve(parts.size());
        for (const Partition& mu : parts) vals.push_back(value_at_mu(mu));
        return vals;
    };
    if (source == "mn") {
        for (const Partition& la : parts)
            rows.emplace_back(la.to_string(), values_for([&](const Partition& mu) {
                                  return mn_character(la, mu);
                              }));
    } else if (source == "knuth") {
        for (const Partition& la : parts) {
            std::vector<Subset> members = descent_list(FineFamily::knuth_class(la));
            rows.emplace_back(la.to_string(), values_for([&](const Partition& mu) {
                                  return fine_character(members, mu.as_composition());
                              }));
        }
    } else if (source == "length") {
        for (int k = 0; k <= n * (n - 1) / 2; ++k) {
            std::vector<Subset> members = descent_list(FineFamily::length(n, k));
            rows.emplace_back("k=" + std::to_string(k), values_for([&](const Partition& mu) {
                                  return fine_character(members, mu.as_composition());
                              }));
        }
    } else if (source == "involutions") {
        std::vector<Subset> members = descent_list(FineFamily::involutions(n));
        rows.emplace_back("gelfand", values_for([&](const Partition& mu) {
                              return fine_character(members, mu.as_composition());
                          }));
    } else {
        throw CLI::ValidationError("--source", "unknown character source: " + source);
    }
    return rows;
}

// The Murnaghan-Nakayama prediction for a source's row domain: chi^lambda for
// shape rows, the coinvariant sums for length rows, the Gelfand sum for the
// involutions row.
std::vector<std::pair<std::string, std::vector<BigInt>>> mn_prediction(const std::string& source,
                                                                       int n) {
    std::vector<Partition> parts = partitions_of(n);
    if (source == "mn" || source == "knuth") return character_rows("mn", n);
    std::vector<std::pair<std::string, std::vector<BigInt>>> rows;
    if (source == "length") {
        std::map<Partition, std::vector<BigInt>> maj_counts;
        int max_k = n * (n - 1) / 2;
        for (const Partition& la : parts) {
            std::vector<BigInt> counts(max_k + 1, 0);
            for_each_syt(la, [&](const StandardTableau& t) { ++counts[major_index(t)]; });
            maj_counts[la] = std::move(counts);
        }
        for (int k = 0; k <= max_k; ++k) {
            std::vector<BigInt> vals;
            for (const Partition& mu : parts) {
                BigInt acc = 0;
                for (const Partition& la : parts)
                    acc += maj_counts[la][k] * mn_character(la, mu);
                vals.push_back(std::move(acc));
            }
            rows.emplace_back("k=" + std::to_string(k), std::move(vals));
        }
        return rows;
    }
    if (source == "involutions") {
        std::vector<BigInt> vals;
        for (const Partition& mu : parts) {
            BigInt acc = 0;
            for (const Partition& la : parts) acc += mn_character(la, mu);
            vals.push_back(std::move(acc));
        }
        rows.emplace_back("gelfand", std::move(vals));
        return rows;
    }
    throw CLI::ValidationError("--diff", "no prediction available for source: " + source);
}

// ---- descent-dist --------------------------------------------------------

FineFamily family_from_cli(const std::string& family, int n, const std::string& shape_text,
                           std::optional<int> length_k, const std::vector<std::string>& perms,
                           bool empty_set) {
    auto shape = [&]() {
        if (shape_text.empty())
            throw CLI::ValidationError("--shape", "family " + family + " requires --shape");
        Partition p = parse_partition(shape_text);
        if (p.n() != n)
            throw CLI::ValidationError("--shape", "shape must partition n = " + std::to_string(n));
        return p;
    };
    if (family == "knuth") return FineFamily::knuth_class(shape());
    if (family == "syt") return FineFamily::syt(shape());
    if (family == "conj") return FineFamily::conj_class(shape());
    if (family == "length") {
        if (!length_k) throw CLI::ValidationError("--length", "family length requires --length");
        return FineFamily::length(n, *length_k);
    }
    if (family == "involutions") return FineFamily::involutions(n);
    if (family == "arc") return FineFamily::arc(n);
    if (family == "explicit") {
        if (!empty_set && perms.empty())
            throw CLI::ValidationError("--perm",
                                       "family explicit requires --perm entries or --empty");
        std::vector<Permutation> members;
        for (const std::string& w : perms) {
            Permutation p = parse_permutation(w);
            if (p.n() != n)
                throw CLI::ValidationError("--perm", "permutation " + w + " is not in S_" +
                                                         std::to_string(n));
            members.push_back(std::move(p));
        }
        return FineFamily::explicit_set(n, std::move(members));
    }
    throw CLI::ValidationError("family", "unknown descent-dist family: " + family);
}

std::string render_descent_dist(const FineFamily& fam, const std::string& mode,
                                OutputFormat format) {
    const int n = fam.n();
    DescentVector v = descent_vector(fam);
    std::optional<CharacterVector> x;
    if (mode != "direct") x = lift_character(v);

    std::vector<std::string> header = {format == OutputFormat::Csv ? "ord" : "descent_set"};
    if (mode == "direct" || mode == "both") header.push_back("direct");
    if (mode == "inverted" || mode == "both") header.push_back("inverted");
    if (mode == "both") header.push_back("diff");

    nlohmann::json json_rows = nlohmann::json::array();
    Table table;
    table.header = header;
    for (std::size_t d = 0; d < v.counts.size(); ++d) {
        Subset D = subset_from_ord(d, n - 1);
        std::vector<std::string> row;
        nlohmann::json jrow;
        if (format == OutputFormat::Json)
            jrow["descent_set"] = subset_to_json(D);
        else
            row.push_back(format == OutputFormat::Csv ? std::to_string(D.ord()) : D.to_string());
        BigRational direct(v.counts[d]);
        if (mode == "direct" || mode == "both") {
            row.push_back(to_string(direct));
            if (format == OutputFormat::Json) jrow["direct"] = to_string(direct);
        }
        if (mode == "inverted" || mode == "both") {
            BigRational inv = count_exact(*x, D);
            row.push_back(to_string(inv));
            if (format == OutputFormat::Json) jrow["inverted"] = to_string(inv);
            if (mode == "both") {
                row.push_back(to_string(BigRational(direct - inv)));
                if (format == OutputFormat::Json)
                    jrow["diff"] = to_string(BigRational(direct - inv));
            }
        }
        table.rows.push_back(std::move(row));
        json_rows.push_back(std::move(jrow));
    }
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["family"] = fam.name();
        j["n"] = n;
        j["mode"] = mode;
        j["rows"] = std::move(json_rows);
        return j.dump() + "\n";
    }
    return render_table(table, format);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Walsh-Hadamard-type matrix families, symmetric group characters, "
                 "and descent-set inversion"};
    app.require_subcommand(1);

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "Print a family matrix");
    std::string family;
    int matrix_n = 0;
    bool use_explicit = false;
    std::optional<std::string> x_text;
    CommonOpts matrix_opts;
    matrix_cmd->add_option("family", family, "A, B, H, Z, M, AM, BM, HM, or MX")->required();
    matrix_cmd->add_option("n", matrix_n, "Matrix index; the order is 2^n")->required();
    matrix_cmd->add_flag("--explicit", use_explicit,
                         "Fill from the closed-form entries instead of the recursion");
    matrix_cmd->add_option("--x", x_text, "Parameter for family MX, e.g. 1/2");
    add_common(matrix_cmd, matrix_opts, "pretty");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity verification suite");
    std::string suite;
    int n_max = 6;
    CommonOpts verify_opts;
    verify_cmd->add_option("suite", suite, "matrices|inverses|eigen|characters|inversion|fineness|all")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("n_max", n_max, "Largest n to verify (default 6)");
    verify_cmd->add_option("--n-max", n_max, "Largest n to verify (overrides the positional)");
    add_common(verify_cmd, verify_opts, "json");

    // character
    auto* char_cmd = app.add_subcommand("character", "Character tables of S_n");
    int char_n = 0;
    std::string source = "mn";
    std::optional<std::string> diff_source;
    CommonOpts char_opts;
    char_cmd->add_option("n", char_n, "Symmetric group degree (n <= 8)")->required();
    char_cmd->add_option("--source", source, "mn|knuth|length|involutions")
        ->check(CLI::IsMember({"mn", "knuth", "length", "involutions"}));
    char_cmd->add_option("--diff", diff_source,
                         "Print discrepancies against another source (usually mn)");
    add_common(char_cmd, char_opts, "pretty");

    // descent-dist
    auto* dist_cmd = app.add_subcommand("descent-dist", "Descent-set distribution over a family");
    std::string dist_family;
    int dist_n = 0;
    std::string mode = "direct";
    std::string shape_text;
    std::optional<int> length_k;
    std::vector<std::string> perms;
    bool empty_set = false;
    CommonOpts dist_opts;
    dist_cmd->add_option("family", dist_family,
                         "knuth|syt|length|involutions|conj|arc|explicit")
        ->required();
    dist_cmd->add_option("n", dist_n, "Symmetric group degree")->required();
    dist_cmd->add_option("--mode", mode, "direct|inverted|both")
        ->check(CLI::IsMember({"direct", "inverted", "both"}));
    dist_cmd->add_option("--shape", shape_text, "Partition parameter, e.g. 2,2");
    dist_cmd->add_option("--length", length_k, "Coxeter length for family length");
    dist_cmd->add_option("--perm", perms, "Explicit member (repeatable), e.g. 213 or 2,1,3");
    dist_cmd->add_flag("--empty", empty_set, "Explicit family with no members");
    add_common(dist_cmd, dist_opts, "pretty");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (matrix_cmd->parsed()) {
            ExactMatrix m = build_requested(family, matrix_n, use_explicit, x_text);
            deliver(render_matrix(m, format_from_string(matrix_opts.format)), matrix_opts, out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerifyReport report = verify_suite(suite, n_max);
            std::string text;
            OutputFormat f = format_from_string(verify_opts.format);
            if (f == OutputFormat::Json) {
                text = verify_to_json(report).dump(2) + "\n";
            } else {
                Table t;
                t.header = {"check", "result", "detail"};
                for (const Check& c : report.checks)
                    t.rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.detail});
                text = render_table(t, f);
            }
            deliver(text, verify_opts, out);
            return report.all_pass() ? 0 : 1;
        }
        if (char_cmd->parsed()) {
            if (char_n < 1 || char_n > 8)
                throw std::domain_error("character tables supported for 1 <= n <= 8");
            Table t;
            t.header = character_columns(char_n);
            auto rows = character_rows(source, char_n);
            if (diff_source) {
                if (*diff_source != "mn" && !(source == "mn" && *diff_source == "knuth"))
                    throw CLI::ValidationError("--diff", "diff target must be mn (or knuth vs mn)");
                auto expected = *diff_source == "mn" ? mn_prediction(source, char_n)
                                                     : character_rows("knuth", char_n);
                t.header = {"row", "mu", source, *diff_source};
                std::vector<Partition> parts = partitions_of(char_n);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t c = 0; c < parts.size(); ++c)
                        if (rows[r].second[c] != expected[r].second[c])
                            t.rows.push_back({rows[r].first, parts[c].to_string(),
                                              to_string(rows[r].second[c]),
                                              to_string(expected[r].second[c])});
            } else {
                for (const auto& [label, vals] : rows) {
                    std::vector<std::string> row = {label};
                    for (const BigInt& v : vals) row.push_back(to_string(v));
                    t.rows.push_back(std::move(row));
                }
            }
            deliver(render_table(t, format_from_string(char_opts.format)), char_opts, out);
            return 0;
        }
        if (dist_cmd->parsed()) {
            FineFamily fam =
                family_from_cli(dist_family, dist_n, shape_text, length_k, perms, empty_set);
            deliver(render_descent_dist(fam, mode, format_from_string(dist_opts.format)),
                    dist_opts, out);
            return 0;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace descmat
