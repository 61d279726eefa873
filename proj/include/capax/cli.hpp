#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "capax/bounds.hpp"
#include "capax/capacity.hpp"
#include "capax/document.hpp"
#include "capax/families.hpp"
#include "capax/transforms.hpp"
#include "capax/verifier.hpp"

namespace capax::cli {

namespace detail {

/// Doubles are rendered through the JSON serializer (shortest round-trip
/// form) so CSV and JSON outputs of the same number agree byte for byte.
inline std::string number_text(double v) { return nlohmann::json(v).dump(); }

template <class T>
set_function<T> apply_transform(const std::string& kind, const set_function<T>& f) {
    if (kind == "mobius")
        return mobius_transform(f);
    if (kind == "zeta")
        return zeta_transform(f);
    if (kind == "interaction")
        return interaction_transform(f);
    if (kind == "banzhaf")
        return banzhaf_transform(f);
    if (kind == "inverse-interaction")
        return inverse_interaction_transform(f);
    throw std::invalid_argument("transform: unknown kind '" + kind + "'");
}

inline naive_kind naive_counterpart(const std::string& kind) {
    if (kind == "mobius")
        return naive_kind::mobius;
    if (kind == "zeta")
        return naive_kind::zeta;
    // The derivative routes share no code with the fast kernels, which makes
    // them the stronger cross-check for the two interaction transforms.
    if (kind == "interaction")
        return naive_kind::interaction_by_derivatives;
    if (kind == "banzhaf")
        return naive_kind::banzhaf_by_derivatives;
    if (kind == "inverse-interaction")
        return naive_kind::inverse_interaction;
    throw std::invalid_argument("transform: unknown kind '" + kind + "'");
}

inline std::string format_partition(const partition& p) {
    std::string out;
    for (const mask_t block : p.blocks) {
        if (!out.empty())
            out += '/';
        out += format_subset(block);
    }
    return out;
}

/// Parses "1,2/3/4,5": blocks separated by '/', elements by commas.
inline partition parse_partition(const std::string& text, const ground_set& ground) {
    partition p;
    std::size_t pos = 0;
    while (true) {
        const std::size_t slash = text.find('/', pos);
        const std::string block_text =
            text.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
        p.blocks.push_back(parse_subset(block_text, ground));
        if (slash == std::string::npos)
            break;
        pos = slash + 1;
    }
    require_partition(p, ground);
    return p;
}

inline int run_transform(const std::string& kind, const std::string& in_path,
                         const std::string& out_path, bool check_naive,
                         std::ostream& /*out*/, std::ostream& err) {
    const any_set_function input = load_document_file(in_path);
    bool matched = true;
    any_set_function result = std::visit(
        [&](const auto& f) -> any_set_function {
            auto fast = apply_transform(kind, f);
            if (check_naive)
                matched = approx_equal(fast, naive_transform(naive_counterpart(kind), f));
            return any_set_function(std::move(fast));
        },
        input);
    if (!matched) {
        err << "error: fast " << kind << " kernel disagrees with the reference sum on "
            << in_path << "\n";
        return 1;
    }
    save_document_file(out_path, result);
    return 0;
}

inline int run_bounds(int max_a, const std::string& format, std::ostream& out) {
    const std::vector<bound_table_row> rows = bound_table(max_a);
    if (format == "csv") {
        out << "a,upper,lower\n";
        for (const auto& row : rows)
            out << row.cardinality << ',' << row.upper << ',' << row.lower << '\n';
        return 0;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        doc.push_back({{"a", row.cardinality}, {"upper", row.upper}, {"lower", row.lower}});
    out << doc.dump(2) << "\n";
    return 0;
}

inline int run_vertex_table(int max_n, const std::string& format, std::ostream& out) {
    const std::vector<vertex_matrix_row> rows = vertex_mobius_matrix(max_n);
    if (format == "csv") {
        out << 'n';
        for (int k = 0; k < max_n; ++k)
            out << ",k" << k;
        out << ",max_at,min_at\n";
        for (const auto& row : rows) {
            out << row.n;
            for (int k = 0; k < max_n; ++k) {
                out << ',';
                if (k < row.n)
                    out << row.values[std::size_t(k)];
            }
            out << ',' << row.max_at << ',';
            if (row.min_at >= 0)
                out << row.min_at;
            out << '\n';
        }
        return 0;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json entry;
        entry["n"] = row.n;
        entry["values"] = row.values;
        entry["maxAt"] = row.max_at;
        if (row.min_at >= 0)
            entry["minAt"] = row.min_at;
        else
            entry["minAt"] = nullptr;
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
    return 0;
}

inline int run_extremal(const std::string& set_spec, int n, const std::string& which,
                        const std::string& out_path) {
    const ground_set ground(n);
    const mask_t a = parse_subset(set_spec, ground);
    set_function<rational> result(ground);
    if (which == "upper")
        result = extremal_upper(a, ground);
    else if (which == "lower")
        result = extremal_lower(a, ground);
    else if (which == "sym-upper")
        result = symmetric_extremal_upper(a, ground);
    else
        result = symmetric_extremal_lower(a, ground);
    save_document_file(out_path, any_set_function(std::move(result)));
    return 0;
}

template <class T>
int run_check_typed(const set_function<T>& f, int k_additive, const std::string& partition_spec,
                    bool want_basis, std::ostream& out) {
    nlohmann::ordered_json report;
    const capacity_report validity = validate_capacity(f);
    report["grounded"] = validity.grounded;
    report["monotone"] = validity.monotone;
    report["normalized"] = validity.normalized;
    report["valid"] = validity.ok();
    if (validity.witness) {
        report["monotonicityWitness"] = {
            {"set", format_subset(validity.witness->first)},
            {"superset", format_subset(validity.witness->second)},
        };
    } else {
        report["monotonicityWitness"] = nullptr;
    }
    report["minimalAdditivity"] = minimal_additivity_order(f);

    bool all_ok = validity.ok();
    if (k_additive > 0) {
        const bool holds = is_at_most_k_additive(f, k_additive);
        report["kAdditive"] = {{"k", k_additive}, {"holds", holds}};
        all_ok = all_ok && holds;
    }
    if (!partition_spec.empty()) {
        const partition p = parse_partition(partition_spec, f.ground());
        const bool compatible = is_p_symmetric_compatible(f, p);
        report["partition"] = {{"spec", detail::format_partition(p)}, {"compatible", compatible}};
        all_ok = all_ok && compatible;
    }
    if (want_basis) {
        if (validity.ok())
            report["basis"] = format_partition(basis(f));
        else
            report["basis"] = nullptr;  // defined for normalized capacities only
    }
    out << report.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

inline int run_check(const std::string& in_path, int k_additive,
                     const std::string& partition_spec, bool want_basis, std::ostream& out) {
    const any_set_function input = load_document_file(in_path);
    return std::visit(
        [&](const auto& f) {
            return run_check_typed(f, k_additive, partition_spec, want_basis, out);
        },
        input);
}

inline int run_verify(int n, const std::string& target, const std::string& set_spec,
                      std::ostream& out) {
    const ground_set ground(n);
    transform_kind kind = transform_kind::mobius;
    if (target == "interaction")
        kind = transform_kind::interaction;
    else if (target == "banzhaf")
        kind = transform_kind::banzhaf;

    std::vector<mask_t> targets;
    if (!set_spec.empty()) {
        targets.push_back(parse_subset(set_spec, ground));
    } else {
        for (mask_t a = 1; a <= ground.full(); ++a)
            targets.push_back(a);
    }

    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    bool all_ok = true;
    std::uint64_t vertices = 0;
    for (const mask_t a : targets) {
        const extreme_report report = extremize(kind, a, ground);
        const bound_spec expected = mobius_bounds(popcount(a), n);
        const bool ok = report.max_value == rational(expected.upper) &&
                        report.min_value == rational(expected.lower);
        vertices = report.vertices;
        results.push_back({
            {"set", format_subset(a)},
            {"size", popcount(a)},
            {"max", report.max_value.str()},
            {"min", report.min_value.str()},
            {"expectedUpper", expected.upper},
            {"expectedLower", expected.lower},
            {"ok", ok},
        });
        all_ok = all_ok && ok;
    }

    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["target"] = to_string(kind);
    doc["vertices"] = vertices;
    doc["allOk"] = all_ok;
    doc["results"] = std::move(results);
    out << doc.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

inline int run_cover(const std::string& in_path, const std::string& out_path) {
    const any_set_function input = load_document_file(in_path);
    any_set_function result = std::visit(
        [](const auto& f) { return any_set_function(monotonic_cover(f)); }, input);
    save_document_file(out_path, result);
    return 0;
}

inline int run_asymptote(int max_n, const std::string& format, std::ostream& out) {
    if (max_n < 2)
        throw std::invalid_argument("asymptote: --max-n must be at least 2");
    if (format == "csv") {
        out << "n,exact,estimate\n";
        for (int n = 2; n <= max_n; ++n)
            out << n << ',' << binomial(n - 1, upper_bound_index(n)) << ','
                << number_text(asymptotic_estimate(n)) << '\n';
        return 0;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (int n = 2; n <= max_n; ++n)
        doc.push_back({{"n", n},
                       {"exact", binomial(n - 1, upper_bound_index(n))},
                       {"estimate", asymptotic_estimate(n)}});
    out << doc.dump(2) << "\n";
    return 0;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Parses the argument
/// list (without the program name), executes one subcommand, and returns
/// the process exit status: 0 on success/verified, 1 on a verification
/// mismatch, 2 on any input error (malformed document, out-of-range n,
/// unknown flag), with a diagnostic on `err` naming the offending part.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact transforms, bounds and extremal capacities for set functions"};
    app.require_subcommand(1);

    std::string kind, in_path, out_path, format = "json", set_spec, which, target = "mobius";
    std::string partition_spec;
    int max_a = 0, max_n = 0, n = 0, k_additive = 0;
    bool check_naive = false, want_basis = false;

    CLI::App* transform = app.add_subcommand(
        "transform", "Apply a transform to a set-function document");
    transform->add_option("--kind", kind, "Transform to apply")
        ->required()
        ->check(CLI::IsMember(
            {"mobius", "zeta", "interaction", "banzhaf", "inverse-interaction"}));
    transform->add_option("--in", in_path, "Input document")->required();
    transform->add_option("--out", out_path, "Output document")->required();
    transform->add_flag("--check-naive", check_naive,
                        "Cross-check the result against the literal defining sum (n <= 12)");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Exact bounds of the Möbius coefficients by cardinality");
    bounds->add_option("--max-a", max_a, "Largest cardinality to tabulate")->required();
    bounds->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* vertex_table = app.add_subcommand(
        "vertex-table", "Möbius coefficients at N of the symmetric vertices, with extreme markers");
    vertex_table->add_option("--max-n", max_n, "Largest ground-set size to tabulate")->required();
    vertex_table->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* extremal = app.add_subcommand(
        "extremal", "Write a capacity attaining a Möbius bound at the given set");
    extremal->add_option("--set", set_spec, "Target subset, e.g. 1,2,3")->required();
    extremal->add_option("--n", n, "Ground-set size")->required();
    extremal->add_option("--which", which, "Which extremal capacity")
        ->required()
        ->check(CLI::IsMember({"upper", "lower", "sym-upper", "sym-lower"}));
    extremal->add_option("--out", out_path, "Output document")->required();

    CLI::App* check = app.add_subcommand(
        "check", "Validate a capacity document and optional structure properties");
    check->add_option("--in", in_path, "Input document")->required();
    check->add_option("--k-additive", k_additive, "Check k-additivity for this k");
    check->add_option("--partition", partition_spec,
                      "Check p-symmetry against blocks like 1,2/3");
    check->add_flag("--basis", want_basis,
                    "Report the coarsest partition into subsets of indifference");

    CLI::App* verify = app.add_subcommand(
        "verify", "Enumerate all 0/1 capacity vertices and compare transform extremes to the bounds");
    verify->add_option("--n", n, "Ground-set size (1..6)")->required();
    verify->add_option("--target", target, "Transform to extremize")
        ->check(CLI::IsMember({"mobius", "interaction", "banzhaf"}));
    verify->add_option("--set", set_spec, "Restrict to one target subset");

    CLI::App* cover = app.add_subcommand(
        "cover", "Replace a grounded set function by its monotonic cover");
    cover->add_option("--in", in_path, "Input document")->required();
    cover->add_option("--out", out_path, "Output document")->required();

    CLI::App* asymptote = app.add_subcommand(
        "asymptote", "Exact bound magnitude next to its large-n estimate");
    asymptote->add_option("--max-n", max_n, "Largest n to report")->required();
    asymptote->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("capax");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (app.got_subcommand(transform))
            return detail::run_transform(kind, in_path, out_path, check_naive, out, err);
        if (app.got_subcommand(bounds))
            return detail::run_bounds(max_a, format, out);
        if (app.got_subcommand(vertex_table))
            return detail::run_vertex_table(max_n, format, out);
        if (app.got_subcommand(extremal))
            return detail::run_extremal(set_spec, n, which, out_path);
        if (app.got_subcommand(check))
            return detail::run_check(in_path, k_additive, partition_spec, want_basis, out);
        if (app.got_subcommand(verify))
            return detail::run_verify(n, target, set_spec, out);
        if (app.got_subcommand(cover))
            return detail::run_cover(in_path, out_path);
        if (app.got_subcommand(asymptote))
            return detail::run_asymptote(max_n, format, out);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        // Prints help for --help (exit 0) or the parse diagnostic otherwise.
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const document_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace capax::cli
