#include "cusp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "cusp/cuspidal.hpp"
#include "cusp/tmat.hpp"

namespace cusp {

namespace {

struct ArgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string subcommand;
    std::map<std::string, std::string> values;
    std::vector<std::string> flags;

    bool has_flag(const std::string& name) const {
        return std::find(flags.begin(), flags.end(), name) != flags.end();
    }
    const std::string* value(const std::string& name) const {
        auto it = values.find(name);
        return it == values.end() ? nullptr : &it->second;
    }
    std::string require(const std::string& name) const {
        const std::string* v = value(name);
        if (!v) throw ArgError("missing required option --" + name);
        return *v;
    }
};

const char* kUsage =
    "usage: cusptheta <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  theta --group <T> --p <p> --class <label> [--phi <label>]\n"
    "                             expected and deduced theta with trace\n"
    "  deduce --row <n>           full deduction trace for a dataset row\n"
    "  verify [--all | --rows a..b] [--format human|tsv]\n"
    "                             re-derive theta for selected records\n"
    "  distinct [--group <T> --p <p> | --all] [--format human|tsv]\n"
    "                             report twist-eigenvalue collisions\n"
    "  tmatrix --group <spec>     T-matrix spectrum of a catalog group (TSV)\n"
    "  chartable --group <spec>   character table of a catalog group (TSV)\n"
    "  selftest                   run the built-in invariant suites\n"
    "\n"
    "global options:\n"
    "  --dataset <path>           dataset override (default: embedded copy,\n"
    "                             or the THETA_DATASET environment variable)\n";

Options parse_args(const std::vector<std::string>& args) {
    static const std::vector<std::string> value_opts = {"group", "p",    "class", "phi",
                                                        "row",   "rows", "format", "dataset"};
    static const std::vector<std::string> flag_opts = {"all"};
    Options opts;
    if (args.empty()) throw ArgError("missing subcommand");
    opts.subcommand = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) != 0) throw ArgError("unexpected argument '" + arg + "'");
        std::string name = arg.substr(2);
        if (std::find(flag_opts.begin(), flag_opts.end(), name) != flag_opts.end()) {
            opts.flags.push_back(name);
            continue;
        }
        if (std::find(value_opts.begin(), value_opts.end(), name) == value_opts.end())
            throw ArgError("unknown option '" + arg + "'");
        if (i + 1 >= args.size()) throw ArgError("option '" + arg + "' needs a value");
        opts.values[name] = args[++i];
    }
    return opts;
}

Dataset load_for(const Options& opts) {
    if (const std::string* path = opts.value("dataset")) {
        std::ifstream in(*path);
        if (!in) throw ArgError("cannot open dataset '" + *path + "'");
        return load_dataset(in);
    }
    if (const char* env = std::getenv("THETA_DATASET")) {
        std::ifstream in(env);
        if (!in) throw ArgError("cannot open dataset '" + std::string(env) + "' (THETA_DATASET)");
        return load_dataset(in);
    }
    return load_dataset_string(embedded_dataset());
}

std::string theta_set_string(const std::vector<CycNum>& values) {
    std::vector<std::string> literals;
    for (const CycNum& v : values) literals.push_back(render_literal(v));
    std::sort(literals.begin(), literals.end());
    std::string out = "{";
    for (size_t i = 0; i < literals.size(); ++i) {
        if (i) out += ",";
        out += literals[i];
    }
    return out + "}";
}

std::string survivor_string(const std::vector<Perm>& perms) {
    std::string out = "{";
    for (size_t i = 0; i < perms.size(); ++i) {
        if (i) out += ", ";
        out += cycle_string(perms[i]);
    }
    return out + "}";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

void print_trace(std::ostream& out, const DeductionTrace& trace) {
    out << "  trace: " << trace.rule_summary() << "\n";
    for (const TraceStep& step : trace.steps)
        out << "    " << step.rule << ": " << step.detail << " -> "
            << survivor_string(step.survivors) << "\n";
}

int cmd_verify(const Options& opts, const Dataset& data, std::ostream& out) {
    int lo = 1, hi = 24;
    if (opts.value("rows")) {
        if (opts.has_flag("all")) throw ArgError("use either --all or --rows, not both");
        std::string range = *opts.value("rows");
        size_t dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw ArgError("bad --rows range '" + range + "'");
        }
    }
    bool tsv = opts.value("format") && *opts.value("format") == "tsv";
    if (opts.value("format") && !tsv && *opts.value("format") != "human")
        throw ArgError("--format must be human or tsv");

    std::vector<std::vector<std::string>> table;
    table.push_back({"row", "class", "phi", "expected", "deduced", "verdict", "status"});
    if (tsv) out << "row\tclass\texpected\tdeduced-set\tverdict\n";
    std::vector<std::string> failures;
    int selected = 0, passed = 0;
    for (const CuspidalRecord& record : data.records) {
        if (record.row < lo || record.row > hi) continue;
        ++selected;
        RecordCheck check = verify_record(record);
        std::string verdict =
            check.trace.verdict ? to_string(*check.trace.verdict) : "no-verdict";
        if (check.ok)
            ++passed;
        else
            failures.push_back("FAIL: " + check.message);
        if (tsv) {
            out << record.row << "\t" << record.class_label << "\t"
                << render_literal(record.theta_expected) << "\t"
                << theta_set_string(check.trace.theta_set) << "\t"
                << (check.ok ? verdict : "FAIL") << "\n";
        } else {
            table.push_back({std::to_string(record.row), record.class_label, record.phi_engine,
                             render_literal(record.theta_expected),
                             theta_set_string(check.trace.theta_set), verdict,
                             check.ok ? "ok" : "FAIL"});
        }
    }
    if (!tsv) {
        print_table(out, table);
        for (const std::string& f : failures) out << f << "\n";
        out << "result: " << passed << "/" << selected << " records pass\n";
    } else {
        for (const std::string& f : failures) out << "# " << f << "\n";
    }
    return failures.empty() ? 0 : 1;
}

int cmd_distinct(const Options& opts, const Dataset& data, std::ostream& out) {
    bool tsv = opts.value("format") && *opts.value("format") == "tsv";
    if (opts.value("format") && !tsv && *opts.value("format") != "human")
        throw ArgError("--format must be human or tsv");
    std::vector<Collision> collisions;
    if (opts.has_flag("all")) {
        collisions = distinct_check_all(data);
    } else if (opts.value("group") || opts.value("p")) {
        LieType type = parse_lie_type(opts.require("group"));
        int p = std::stoi(opts.require("p"));
        collisions = distinct_check(data, type, p);
    } else {
        throw ArgError("distinct needs --all or --group/--p");
    }
    if (tsv) out << "group\tp\trow_a\tclass_a\trow_b\tclass_b\ttheta\n";
    for (const Collision& c : collisions) {
        const CuspidalRecord& ra = data.records[c.index_a];
        if (tsv)
            out << to_string(ra.group_type) << "\t" << ra.p << "\t" << c.row_a << "\t"
                << c.class_a << "\t" << c.row_b << "\t" << c.class_b << "\t"
                << render_literal(c.theta) << "\n";
        else
            out << "collision " << to_string(ra.group_type) << " p=" << ra.p << ": " << c.class_a
                << " (row " << c.row_a << ") ~ " << c.class_b << " (row " << c.row_b
                << "), theta = " << render_literal(c.theta) << "\n";
    }
    if (!tsv) out << collisions.size() << " collision(s) across the selection\n";
    return 0;
}

void print_record_report(std::ostream& out, const CuspidalRecord& record,
                         const RecordCheck& check) {
    out << "row " << record.row << " " << to_string(record.group_type) << " p=" << record.p
        << " class " << record.class_label << " phi " << record.phi_engine << " (table notation "
        << record.phi_paper << ")\n";
    out << "  expected theta: " << render_literal(record.theta_expected) << "\n";
    out << "  deduced theta-set: " << theta_set_string(check.trace.theta_set)
        << "  verdict: " << (check.trace.verdict ? to_string(*check.trace.verdict) : "no-verdict")
        << "  [" << to_string(record.derivation) << "]\n";
    print_trace(out, check.trace);
    if (!check.ok) out << "  FAIL: " << check.message << "\n";
}

int cmd_theta(const Options& opts, const Dataset& data, std::ostream& out) {
    LieType type = parse_lie_type(opts.require("group"));
    int p = std::stoi(opts.require("p"));
    std::string class_label = opts.require("class");
    const std::string* phi = opts.value("phi");
    int matched = 0, failed = 0;
    for (const CuspidalRecord& record : data.records) {
        if (record.group_type != type || record.p != p || record.class_label != class_label)
            continue;
        if (phi && record.phi_engine != *phi) continue;
        ++matched;
        RecordCheck check = verify_record(record);
        if (!check.ok) ++failed;
        print_record_report(out, record, check);
    }
    if (matched == 0)
        throw ArgError("no dataset record matches " + to_string(type) + " p=" +
                       std::to_string(p) + " class " + class_label);
    return failed == 0 ? 0 : 1;
}

int cmd_deduce(const Options& opts, const Dataset& data, std::ostream& out) {
    int row = 0;
    try {
        row = std::stoi(opts.require("row"));
    } catch (const ArgError&) {
        throw;
    } catch (const std::exception&) {
        throw ArgError("--row needs an integer");
    }
    if (row < 1 || row > 24) throw ArgError("--row must lie in 1..24");
    int failed = 0;
    for (const CuspidalRecord& record : data.records) {
        if (record.row != row) continue;
        RecordCheck check = verify_record(record);
        if (!check.ok) ++failed;
        print_record_report(out, record, check);
    }
    return failed == 0 ? 0 : 1;
}

int cmd_tmatrix(const Options& opts, std::ostream& out) {
    GroupSpec spec = parse_group_spec(opts.require("group"));
    TSpectrum spectrum = t_spectrum(spec);
    out << "class_rep\tcentralizer\tphi\tdim\ttheta\n";
    for (size_t i = 0; i < spectrum.objects.size(); ++i) {
        const SimpleObject& obj = spectrum.objects[i];
        out << cycle_string(obj.rep) << "\t" << to_string(obj.centralizer_label) << "\t"
            << to_string(obj.phi) << "\t" << obj.dimension << "\t"
            << render_literal(spectrum.eigenvalues[i]) << "\n";
    }
    long long order = spec.order();
    out << "# sum dim^2 = " << spectrum.dimension_square_sum << " (order^2 = " << order * order
        << ")\n";
    return 0;
}

int cmd_chartable(const Options& opts, std::ostream& out) {
    GroupSpec spec = parse_group_spec(opts.require("group"));
    CharacterTable table = char_table(spec);
    out << "class";
    for (const ConjClass& cls : table.classes) out << "\t" << cycle_string(cls.rep);
    out << "\nsize";
    for (const ConjClass& cls : table.classes) out << "\t" << cls.size();
    out << "\n";
    for (size_t row = 0; row < table.labels.size(); ++row) {
        out << to_string(table.labels[row]);
        for (size_t c = 0; c < table.classes.size(); ++c)
            out << "\t" << render_value(table.values[row][c]);
        out << "\n";
    }
    return 0;
}

int cmd_selftest(std::ostream& out) {
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        out << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };

    bool orth = true;
    for (const GroupSpec& spec : recognition_catalog())
        if (!verify_orthogonality(char_table(spec)).ok) orth = false;
    report(orth, "orthogonality: every catalog character table");

    bool hooks = true;
    for (int n = 1; n <= 6; ++n) {
        Partition ones(n, 1);
        for (const Partition& lambda : partitions_of(n))
            if (mn_value(lambda, ones) != hook_degree(lambda)) hooks = false;
    }
    report(hooks, "Murnaghan-Nakayama degrees match hook-length degrees (n <= 6)");

    bool tspec = true;
    for (const char* name : {"S3", "S4", "S5", "D8"}) {
        GroupSpec spec = parse_group_spec(name);
        TSpectrum spectrum = t_spectrum(spec);
        long long order = spec.order();
        if (spectrum.dimension_square_sum != order * order) tspec = false;
        for (size_t i = 0; i < spectrum.objects.size(); ++i)
            if (spectrum.eigenvalues[i].pow(perm_order(spectrum.objects[i].rep)) != CycNum::one())
                tspec = false;
    }
    report(tspec, "T-spectrum: sum dim^2 = |G|^2 and eigenvalue orders divide ord(x)");

    bool cartan = cartan_det(LieType::G2) == 1 && cartan_det(LieType::F4) == 1 &&
                  cartan_det(LieType::E6) == 3 && cartan_det(LieType::E7) == 2 &&
                  cartan_det(LieType::E8) == 1;
    report(cartan, "Cartan determinants: G2,F4,E8 -> 1, E6 -> 3, E7 -> 2");

    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (!args.empty() && (args[0] == "--help" || args[0] == "help")) {
            out << kUsage;
            return 0;
        }
        Options opts = parse_args(args);
        if (opts.subcommand == "selftest") return cmd_selftest(out);
        if (opts.subcommand == "tmatrix") return cmd_tmatrix(opts, out);
        if (opts.subcommand == "chartable") return cmd_chartable(opts, out);
        Dataset data = load_for(opts);
        if (opts.subcommand == "verify") return cmd_verify(opts, data, out);
        if (opts.subcommand == "distinct") return cmd_distinct(opts, data, out);
        if (opts.subcommand == "theta") return cmd_theta(opts, data, out);
        if (opts.subcommand == "deduce") return cmd_deduce(opts, data, out);
        throw ArgError("unknown subcommand '" + opts.subcommand + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        err << kUsage;
        return 2;
    }
}

}  // namespace cusp
