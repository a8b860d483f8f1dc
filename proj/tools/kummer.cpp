#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kummer/io.hpp"
#include "kummer/lattice.hpp"
#include "kummer/report.hpp"

namespace {

using namespace kummer;

// Prints to stdout unless an output path was given.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string grid_rows_as(const std::vector<GridRow>& rows, const std::string& format) {
    return format == "json" ? grid_to_json(rows) : grid_to_csv(rows);
}

int cmd_count(Int n, Int d, Int t, const std::string& format, const std::string& out) {
    const GridRow row = make_grid_row(n, d, t);
    if (format == "text") {
        std::ostringstream text;
        text << "n=" << row.n << " d=" << row.d << " t=" << row.t << "\n"
             << "count: " << row.count << " (branch " << branch_label(row.branch)
             << ")\n"
             << "oracle: " << row.oracle << "\n"
             << "classes: ";
        text << "[";
        for (std::size_t i = 0; i < row.classes.size(); ++i)
            text << (i ? " " : "") << row.classes[i];
        text << "]\n"
             << "agree: " << (row.agree ? "true" : "false") << "\n";
        emit(text.str(), out);
    } else {
        emit(grid_rows_as({row}, format), out);
    }
    return 0;
}

int cmd_grid(Int n_max, Int d_max, const std::string& format, const std::string& out) {
    emit(grid_rows_as(compute_grid(n_max, d_max), format), out);
    return 0;
}

int cmd_verify(Int n_max, Int d_max, const std::string& out) {
    const VerifyReport report = run_verify(n_max, d_max);
    emit(format_verify_report(report), out);
    return report.ok() ? 0 : 1;
}

int cmd_classes(Int n, Int d, Int t, const std::string& format, const std::string& out) {
    const auto classes = enumerate_component_classes(n, d, t);
    if (format == "csv")
        emit(classes_to_csv(classes), out);
    else if (format == "json")
        emit(classes_to_json(classes), out);
    else
        emit(classes_to_text(n, d, t, classes), out);
    return 0;
}

int cmd_marked(Int n, const std::string& out) {
    emit(std::to_string(count_marked_components(n)) + "\n", out);
    return 0;
}

int cmd_monodromy_check(const std::string& path, const std::string& out) {
    const LatticeQuery query = parse_lattice_query(read_text_file(path));
    if (!query.matrix)
        throw format_error("monodromy-check requires a document with a 'matrix' field");
    const KummerLattice lattice(query.n);
    const Mat7& m = *query.matrix;
    std::ostringstream text;
    text << "n: " << query.n << "\n";
    std::string reason;
    bool verdict = false;
    if (!is_isometry(lattice, m)) {
        text << "isometry: false\n";
        reason = "not an isometry";
    } else {
        const IntegerIsometry g(lattice, m);
        const Int det = determinant(m);
        const int orient = orientation_sign(lattice, g);
        const DiscriminantAction action = discriminant_action(lattice, g);
        text << "isometry: true\n"
             << "determinant: " << det << "\n"
             << "orientation: " << (orient > 0 ? "+1" : "-1") << "\n"
             << "discriminant-action: "
             << (action == DiscriminantAction::plus_id
                     ? "+id"
                     : action == DiscriminantAction::minus_id ? "-id" : "other")
             << "\n";
        if (orient < 0) {
            reason = "orientation is reversed";
        } else if (action == DiscriminantAction::other) {
            reason = "discriminant action is not +-id";
        } else {
            text << "chi: " << (chi(lattice, g) > 0 ? "+1" : "-1") << "\n";
            if (det * chi(lattice, g) == 1)
                verdict = true;
            else
                reason = "det * chi = -1";
        }
    }
    text << "monodromy: " << (verdict ? "true" : "false") << "\n";
    if (!verdict) text << "reason: " << reason << "\n";
    emit(text.str(), out);
    return 0;
}

int cmd_pair_isometric(const std::string& path_a, const std::string& path_b,
                       const std::string& out) {
    const MarkedPairInput a = parse_pair_input(read_text_file(path_a));
    const MarkedPairInput b = parse_pair_input(read_text_file(path_b));
    const bool same = marked_pairs_isometric(a.gram, a.marked, b.gram, b.marked);
    emit(std::string(same ? "true" : "false") + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected components of moduli of polarised Kummer-type manifolds"};
    app.require_subcommand(1);

    Int n = 0, d = 0, t = 0, n_max = 0, d_max = 0;
    std::string format, out, file_a, file_b;

    auto* count = app.add_subcommand("count", "closed-form and oracle count for one (n, d, t)");
    count->add_option("--n", n, "fibre dimension parameter")->required();
    count->add_option("--d", d, "half the square of the polarisation")->required();
    count->add_option("--t", t, "divisibility of the polarisation")->required();
    count->add_option("--format", format, "text, csv or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    count->add_option("--out", out, "write the report to a file");

    auto* grid = app.add_subcommand("grid", "counts for every valid (n, d, t) in a range");
    grid->add_option("--n-max", n_max, "largest n")->required();
    grid->add_option("--d-max", d_max, "largest d")->required();
    grid->add_option("--format", format, "csv or json")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    grid->add_option("--out", out, "write the table to a file");

    auto* verify = app.add_subcommand(
        "verify", "cross-check the closed form against both oracles on a range");
    verify->add_option("--n-max", n_max, "largest n")->required();
    verify->add_option("--d-max", d_max, "largest d")->required();
    verify->add_option("--out", out, "write the report to a file");

    auto* classes = app.add_subcommand("classes", "pair lattices of the component classes");
    classes->add_option("--n", n, "fibre dimension parameter")->required();
    classes->add_option("--d", d, "half the square of the polarisation")->required();
    classes->add_option("--t", t, "divisibility of the polarisation")->required();
    classes->add_option("--format", format, "text, csv or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    classes->add_option("--out", out, "write the report to a file");

    auto* marked = app.add_subcommand("marked", "number of marked polarised components");
    marked->add_option("--n", n, "fibre dimension parameter")->required();
    marked->add_option("--out", out, "write the count to a file");

    auto* mono = app.add_subcommand("monodromy-check",
                                    "decide whether a matrix is a monodromy operator");
    mono->add_option("file", file_a, "JSON document with fields n and matrix")->required();
    mono->add_option("--out", out, "write the report to a file");

    auto* pair_iso = app.add_subcommand(
        "pair-isometric", "decide whether two marked pair lattices are isometric");
    pair_iso->add_option("first", file_a, "JSON document with fields gram and marked")
        ->required();
    pair_iso->add_option("second", file_b, "JSON document with fields gram and marked")
        ->required();
    pair_iso->add_option("--out", out, "write the verdict to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(n, d, t, format, out);
        if (grid->parsed()) return cmd_grid(n_max, d_max, format, out);
        if (verify->parsed()) return cmd_verify(n_max, d_max, out);
        if (classes->parsed()) return cmd_classes(n, d, t, format, out);
        if (marked->parsed()) return cmd_marked(n, out);
        if (mono->parsed()) return cmd_monodromy_check(file_a, out);
        if (pair_iso->parsed()) return cmd_pair_isometric(file_a, file_b, out);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
