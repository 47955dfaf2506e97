// Command-line front end over the ldpcb C API.

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ldpcb/ldpcb.h"
#include "table_spec.hpp"

namespace {

using ldpcb::cli::OutputFormat;

constexpr int kExitFailure = 2;

// Carries a one-line diagnostic up to main().
struct Failure {
    std::string message;
};

void check(ldpcb_status status, const std::string& context = {}) {
    if (status == LDPCB_OK) return;
    throw Failure{(context.empty() ? "" : context + ": ") + ldpcb_last_error()};
}

struct CodeDeleter {
    void operator()(ldpcb_code* c) const { ldpcb_code_free(c); }
};
struct EnumeratorDeleter {
    void operator()(ldpcb_enumerator* e) const { ldpcb_enumerator_free(e); }
};
struct MatrixDeleter {
    void operator()(ldpcb_matrix* m) const { ldpcb_matrix_free(m); }
};
using CodePtr = std::unique_ptr<ldpcb_code, CodeDeleter>;

std::string fixed6(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_row(std::ostream& out, const std::vector<std::string>& fields, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << '\n';
    } else {
        out << '|';
        for (const auto& f : fields) out << ' ' << f << " |";
        out << '\n';
    }
}

void emit_header(std::ostream& out, const std::vector<std::string>& names, OutputFormat format) {
    emit_row(out, names, format);
    if (format == OutputFormat::Markdown) {
        out << '|';
        for (std::size_t i = 0; i < names.size(); ++i) out << "---|";
        out << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{"cannot read `" + path + "`"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CodePtr parse_code(std::uint32_t q, const std::string& text) {
    ldpcb_code* raw = nullptr;
    check(ldpcb_code_parse(q, text.c_str(), &raw), "code `" + text + "`");
    return CodePtr(raw);
}

// δ for `rate`, or nullopt when the bound admits no positive distance.
std::optional<ldpcb_inversion> invert(std::uint32_t q, const ldpcb_code* code, double rate, const std::string& cw) {
    ldpcb_inversion inv{};
    const ldpcb_status status = ldpcb_invert_to_delta(q, code, rate, cw.c_str(), &inv);
    if (status == LDPCB_ERR_NO_SOLUTION) return std::nullopt;
    check(status);
    return inv;
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
    std::uint32_t q = 0;
    std::optional<double> delta;
    std::optional<double> rate;
    std::string rho;
    std::string constituent;
    std::string cw = "composite";
    std::string format = "csv";
};

int run_bound(const BoundArgs& args) {
    const OutputFormat format = ldpcb::cli::parse_format(args.format);
    if (args.rate && !(*args.rate > 0.0 && *args.rate < 1.0)) throw Failure{"--rate must lie in (0, 1)"};
    if (args.delta && !(*args.delta > 0.0 && *args.delta <= 1.0)) throw Failure{"--delta must lie in (0, 1]"};
    if (!args.rate && !args.delta) throw Failure{"one of --delta or --rate is required"};
    if (args.rho.empty() == args.constituent.empty()) throw Failure{"exactly one of --rho or --constituent is required"};

    const std::string code_text = args.rho.empty() ? args.constituent : "rho:" + args.rho;
    const CodePtr code = parse_code(args.q, code_text);
    std::vector<std::string> row{std::to_string(args.q), code_text};
    if (args.rate) {
        const auto inv = invert(args.q, code.get(), *args.rate, args.cw);
        if (!inv) throw Failure{"the bound forbids rate " + fixed6(*args.rate) + " for every delta > 0"};
        row.insert(row.end(), {"rate", fixed6(*args.rate), fixed6(inv->delta), fixed6(inv->omega_star)});
    } else {
        ldpcb_bound_result r{};
        check(ldpcb_rate_bound(args.q, code.get(), *args.delta, args.cw.c_str(), &r));
        row.insert(row.end(), {"delta", fixed6(*args.delta), fixed6(r.rate_bound), fixed6(r.omega_star)});
    }
    emit_header(std::cout, {"q", "code", "input", "delta_or_rate", "result", "omega_star"}, format);
    emit_row(std::cout, row, format);
    return 0;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    std::string spec_path;
    std::string format;
    unsigned jobs = 0;
};

std::vector<std::string> table_cell_values(const ldpcb::cli::TableCell& cell, const std::vector<std::string>& columns) {
    const std::string where = "line " + std::to_string(cell.line);
    CodePtr code = parse_code(cell.q, cell.code);
    std::vector<std::string> out{cell.label, std::to_string(cell.q), cell.code, fixed6(cell.rate)};
    for (const auto& column : columns) {
        if (column == "gv") {
            double gv = 0.0;
            check(ldpcb_gv_delta(cell.q, cell.rate, &gv), where);
            out.push_back(fixed6(gv));
            continue;
        }
        const auto inv = invert(cell.q, code.get(), cell.rate, ldpcb::cli::bound_of_column(column));
        out.push_back(inv ? fixed6(inv->delta) : "none");
    }
    return out;
}

int run_table(const TableArgs& args) {
    ldpcb::cli::TableSpec spec;
    try {
        spec = ldpcb::cli::parse_table_spec(read_file(args.spec_path));
    } catch (const ldpcb::cli::SpecError& e) {
        throw Failure{args.spec_path + ": " + e.what()};
    }
    const OutputFormat format = args.format.empty() ? spec.format : ldpcb::cli::parse_format(args.format);

    const std::size_t n = spec.cells.size();
    std::vector<std::vector<std::string>> rows(n);
    std::vector<std::string> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = table_cell_values(spec.cells[i], spec.columns);
            } catch (const Failure& f) {
                errors[i] = f.message;
            }
        }
    };
    unsigned jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < n; ++i)
        if (!errors[i].empty())
            throw Failure{args.spec_path + ": line " + std::to_string(spec.cells[i].line) + ": " + errors[i]};

    std::vector<std::string> header{"label", "q", "code", "rate"};
    header.insert(header.end(), spec.columns.begin(), spec.columns.end());
    emit_header(std::cout, header, format);
    for (const auto& row : rows) emit_row(std::cout, row, format);
    return 0;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
    std::uint32_t q = 2;
    std::size_t ell = 2;
    std::size_t n0 = 4;
    std::size_t n = 12;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
};

int run_oracle(const OracleArgs& args) {
    std::vector<std::size_t> distances(args.trials);
    ldpcb_smoke_stats stats{};
    check(ldpcb_ensemble_smoke(args.q, args.ell, args.n0, args.n, args.trials, args.seed, distances.data(), &stats));

    std::ostringstream out;
    out << "# ensemble oracle q=" << args.q << " ell=" << args.ell << " n0=" << args.n0 << " N=" << args.n
        << " trials=" << args.trials << " seed=" << args.seed << '\n';
    out << "trial,d,d_over_N\n";
    for (std::size_t t = 0; t < distances.size(); ++t)
        out << t + 1 << ',' << distances[t] << ',' << fixed6(static_cast<double>(distances[t]) / args.n) << '\n';
    out << "statistic,d_over_N\n";
    out << "mean," << fixed6(stats.mean) << "\nmin," << fixed6(stats.min) << "\nmax," << fixed6(stats.max) << '\n';

    // asymptotic context for the same (ell, n0) ensemble
    const double rate = 1.0 - static_cast<double>(args.ell) / static_cast<double>(args.n0);
    const CodePtr code = parse_code(args.q, "rho:" + std::to_string(args.n0) + ":1");
    double gv = 0.0;
    check(ldpcb_gv_delta(args.q, rate, &gv));
    out << "asymptotic,rate,gv,ldpc_upper_zero_floor,ldpc_upper_composite\n";
    out << "asymptotic," << fixed6(rate) << ',' << fixed6(gv);
    for (const char* cw : {"zero-floor", "composite"}) {
        const auto inv = invert(args.q, code.get(), rate, cw);
        out << ',' << (inv ? fixed6(inv->delta) : "none");
    }
    out << '\n';
    std::cout << out.str();
    return 0;
}

// ---- enum / gv -----------------------------------------------------------

struct EnumArgs {
    std::uint32_t q = 2;
    std::size_t n0 = 0;
    std::size_t d0 = 2;
    std::string matrix;
};

int run_enum(const EnumArgs& args) {
    ldpcb_enumerator* raw = nullptr;
    if (!args.matrix.empty()) {
        ldpcb_matrix* m = nullptr;
        check(ldpcb_matrix_parse(read_file(args.matrix).c_str(), &m), args.matrix);
        std::unique_ptr<ldpcb_matrix, MatrixDeleter> owned(m);
        check(ldpcb_matrix_enumerator(m, &raw));
    } else {
        if (args.n0 == 0) throw Failure{"--n0 or --matrix is required"};
        check(ldpcb_enumerator_mds(args.q, args.n0, args.d0, &raw));
    }
    std::unique_ptr<ldpcb_enumerator, EnumeratorDeleter> e(raw);
    std::size_t needed = 0;
    ldpcb_enumerator_to_text(e.get(), nullptr, 0, &needed);
    std::string text(needed + 1, '\0');
    check(ldpcb_enumerator_to_text(e.get(), text.data(), text.size(), &needed));
    text.resize(needed);
    std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic minimum-distance bounds for LDPC codes over GF(q)"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* cmd_bound = app.add_subcommand("bound", "Rate bound at a relative distance, or distance bound at a rate");
    cmd_bound->add_option("--q", bound.q, "Field order")->required();
    auto* opt_delta = cmd_bound->add_option("--delta", bound.delta, "Relative minimum distance");
    auto* opt_rate = cmd_bound->add_option("--rate", bound.rate, "Code rate (inverts to a distance bound)");
    opt_delta->excludes(opt_rate);
    auto* opt_rho = cmd_bound->add_option("--rho", bound.rho, "Row degree distribution `i:frac,...`");
    auto* opt_constituent = cmd_bound->add_option(
        "--constituent", bound.constituent, "Constituent code `spc:<n0>`, `mds:<n0>:<d0>` or `file:<path>`");
    opt_rho->excludes(opt_constituent);
    cmd_bound->add_option("--cw-bound", bound.cw, "Constant-weight bound: composite, zero-floor, zero");
    cmd_bound->add_option("--format", bound.format, "csv or markdown");

    TableArgs table;
    auto* cmd_table = app.add_subcommand("table", "Evaluate every cell of a table spec file");
    cmd_table->add_option("spec", table.spec_path, "Table spec file")->required();
    cmd_table->add_option("--format", table.format, "Override the file's format (csv or markdown)");
    cmd_table->add_option("--jobs", table.jobs, "Worker threads (0 = hardware concurrency)");

    OracleArgs oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "Exact minimum distances of sampled finite-length codes");
    cmd_oracle->add_option("--q", oracle.q, "Field order")->required();
    cmd_oracle->add_option("--ell", oracle.ell, "Variable-node degree")->required();
    cmd_oracle->add_option("--n0", oracle.n0, "Check-node degree")->required();
    cmd_oracle->add_option("--N", oracle.n, "Code length")->required();
    cmd_oracle->add_option("--trials", oracle.trials, "Number of sampled codes")->required();
    cmd_oracle->add_option("--seed", oracle.seed, "Generator seed")->required();

    EnumArgs en;
    auto* cmd_enum = app.add_subcommand("enum", "Print a weight enumerator (MDS formula or brute force)");
    cmd_enum->add_option("--q", en.q, "Field order");
    cmd_enum->add_option("--n0", en.n0, "MDS code length");
    cmd_enum->add_option("--d0", en.d0, "MDS minimum distance (2 = SPC)");
    cmd_enum->add_option("--matrix", en.matrix, "Parity-check matrix file for brute-force enumeration");

    std::uint32_t gv_q = 2;
    double gv_rate = 0.5;
    auto* cmd_gv = app.add_subcommand("gv", "Gilbert-Varshamov relative distance");
    cmd_gv->add_option("--q", gv_q, "Field order")->required();
    cmd_gv->add_option("--rate", gv_rate, "Code rate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitFailure;
    }

    try {
        if (*cmd_bound) return run_bound(bound);
        if (*cmd_table) return run_table(table);
        if (*cmd_oracle) return run_oracle(oracle);
        if (*cmd_enum) return run_enum(en);
        if (*cmd_gv) {
            double delta = 0.0;
            check(ldpcb_gv_delta(gv_q, gv_rate, &delta));
            std::cout << fixed6(delta) << '\n';
            return 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
