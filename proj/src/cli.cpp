#include "egth/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "egth/closed_form.hpp"
#include "egth/corpus.hpp"
#include "egth/diagnostics.hpp"
#include "egth/egth.hpp"
#include "egth/gth.hpp"
#include "egth/kohlas.hpp"
#include "egth/matrix_io.hpp"

namespace egth::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAlgorithm = 2;
constexpr int kExitGolden = 3;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

/// 15 significant digits, scientific; the fixed numeric format of JSON and
/// CSV reports.
std::string num15(double v) { return fmt("%.14e", v); }

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct CommonOptions {
    std::string input;
    std::string corpus_id;
    std::string precision = "double";
    std::string algorithm = "egth";
    std::string report = "table";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_precision = true,
                bool with_algorithm = true) {
    auto* in = cmd->add_option("--input", opt.input, "matrix document file");
    auto* co = cmd->add_option("--corpus", opt.corpus_id, "test problem id");
    in->excludes(co);
    co->excludes(in);
    if (with_precision)
        cmd->add_option("--precision", opt.precision, "single or double (default double)")
            ->check(CLI::IsMember({"single", "double"}));
    if (with_algorithm)
        cmd->add_option("--algorithm", opt.algorithm, "egth, theorem7 or closedform (default egth)")
            ->check(CLI::IsMember({"egth", "theorem7", "closedform"}));
    cmd->add_option("--report", opt.report, "table, csv or json (default table)")
        ->check(CLI::IsMember({"table", "csv", "json"}));
}

struct LoadedInput {
    std::string label;
    MarkovRenewalProcess<double> mrp;
};

LoadedInput load_input(const CommonOptions& opt) {
    if (!opt.input.empty()) {
        std::ifstream file(opt.input);
        if (!file) throw ValidationError("cannot open input file '" + opt.input + "'");
        return LoadedInput{opt.input, parse_matrix_document(file)};
    }
    if (!opt.corpus_id.empty()) {
        corpus::TestProblem tp = corpus::load(opt.corpus_id);
        return LoadedInput{tp.id, MarkovRenewalProcess<double>::chain(std::move(tp.p))};
    }
    throw ValidationError("one of --input or --corpus is required");
}

template <class Scalar>
MfptMatrix<Scalar> run_mfpt(const std::string& algorithm, const MarkovRenewalProcess<Scalar>& mrp) {
    if (algorithm == "egth") return mfpt_egth(mrp);
    if (algorithm == "theorem7") return theorem7_mfpt(mrp);
    // closedform: explicit formulas cover 1..3 states; 4-state full matrices
    // route through the recursion, larger sizes are not covered.
    const Index n = mrp.size();
    if (n == 1) return mfpt_1(mrp.mu()(0));
    if (n == 2) return mfpt_2(mrp);
    if (n == 3) return mfpt_3(mrp);
    if (n == 4) return theorem7_mfpt(mrp);
    throw ValidationError("closedform supports at most 4 states, input has " + std::to_string(n));
}

/// Everything one run produces; optional parts stay empty for subcommands
/// that do not compute them.
struct RunReport {
    std::string problem;
    std::string precision;
    std::string algorithm;
    std::optional<DenseVector<double>> pi;
    std::optional<DenseMatrix<double>> m;
    std::optional<MfptErrorReport> mfpt_errors;
    std::optional<StationaryErrorReport> stationary_errors;
    std::optional<PrecisionComparison> digits;  // filled by compare
    std::optional<CompareReport> compare;       // filled by compare
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

void json_pair_list(std::string& s, const std::vector<std::pair<Index, Index>>& pairs) {
    s += '[';
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (k) s += ',';
        s += '[' + std::to_string(pairs[k].first) + ',' + std::to_string(pairs[k].second) + ']';
    }
    s += ']';
}

void json_mfpt_errors(std::string& s, const MfptErrorReport& e) {
    s += "{\"min\":" + num15(e.min_abs) + ",\"max\":" + num15(e.max_abs) +
         ",\"residual\":" + num15(e.residual) + "}";
}

void json_stationary_errors(std::string& s, const StationaryErrorReport& e) {
    s += "{\"min\":" + num15(e.min_abs) + ",\"max\":" + num15(e.max_abs) +
         ",\"residual\":" + num15(e.residual) + "}";
}

void json_comparison(std::string& s, const PrecisionComparison& c) {
    s += "{\"min\":" + num15(c.min_abs) + ",\"max\":" + num15(c.max_abs) +
         ",\"relative_error\":" + num15(c.relative_error) + "}";
}

std::string to_json(const RunReport& r, bool with_timestamp) {
    std::string s = "{";
    s += "\"problem\":\"" + r.problem + "\",";
    s += "\"precision\":\"" + r.precision + "\",";
    s += "\"algorithm\":\"" + r.algorithm + "\",";
    s += "\"pi\":";
    if (r.pi) {
        s += '[';
        for (Index i = 0; i < r.pi->size(); ++i) {
            if (i) s += ',';
            s += num15((*r.pi)(i));
        }
        s += ']';
    } else {
        s += "null";
    }
    s += ",\"m\":";
    if (r.m) {
        s += '[';
        for (Index i = 0; i < r.m->rows(); ++i) {
            if (i) s += ',';
            s += '[';
            for (Index j = 0; j < r.m->cols(); ++j) {
                if (j) s += ',';
                s += num15((*r.m)(i, j));
            }
            s += ']';
        }
        s += ']';
    } else {
        s += "null";
    }
    s += ",\"errors\":{\"mfpt\":";
    if (r.mfpt_errors)
        json_mfpt_errors(s, *r.mfpt_errors);
    else
        s += "null";
    s += ",\"stationary\":";
    if (r.stationary_errors)
        json_stationary_errors(s, *r.stationary_errors);
    else
        s += "null";
    s += ",\"accurate_digits\":";
    if (r.digits && r.digits->accurate_digits)
        s += num15(*r.digits->accurate_digits);
    else
        s += "null";
    s += ",\"excluded_pairs\":";
    json_pair_list(s, r.digits ? r.digits->excluded_pairs
                               : std::vector<std::pair<Index, Index>>{});
    s += "}";
    if (r.compare) {
        const CompareReport& c = *r.compare;
        s += ",\"compare\":{";
        s += "\"mfpt_residuals\":{\"double\":";
        json_mfpt_errors(s, c.mfpt_double);
        s += ",\"single\":";
        json_mfpt_errors(s, c.mfpt_single);
        s += "},\"stationary_residuals\":{\"egth_double\":";
        json_stationary_errors(s, c.stationary_double);
        s += ",\"egth_single\":";
        json_stationary_errors(s, c.stationary_single);
        s += ",\"gth_double\":";
        json_stationary_errors(s, c.gth_stationary_double);
        s += ",\"gth_single\":";
        json_stationary_errors(s, c.gth_stationary_single);
        s += "},\"pi_difference\":{\"egth\":";
        json_comparison(s, c.pi_comparison);
        s += ",\"gth\":";
        json_comparison(s, c.gth_pi_comparison);
        s += "},\"m_difference\":";
        json_comparison(s, c.mfpt_comparison);
        s += "}";
    }
    if (with_timestamp) s += ",\"timestamp\":\"" + timestamp_utc() + "\"";
    s += "}\n";
    return s;
}

// ---------------------------------------------------------------------------
// Table / CSV
// ---------------------------------------------------------------------------

double display_scale(const DenseMatrix<double>& m) {
    const double mx = m.cwiseAbs().maxCoeff();
    if (!(mx >= 100.0)) return 1.0;
    return std::pow(10.0, std::floor(std::log10(mx)));
}

void print_matrix_table(std::ostream& out, const DenseMatrix<double>& m) {
    const double scale = display_scale(m);
    if (scale != 1.0)
        out << "m (x " << fmt("%.1e", scale) << "):\n";
    else
        out << "m:\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j)
            out << (j ? "  " : "  ") << fmt("%17.15f", m(i, j) / scale);
        out << "\n";
    }
}

void print_table(std::ostream& out, const RunReport& r, bool with_timestamp) {
    out << "problem:   " << r.problem << "\n";
    out << "precision: " << r.precision << "\n";
    out << "algorithm: " << r.algorithm << "\n";
    if (with_timestamp) out << "timestamp: " << timestamp_utc() << "\n";
    if (r.pi) {
        out << "pi:";
        for (Index i = 0; i < r.pi->size(); ++i) out << ' ' << fmt("%.15g", (*r.pi)(i));
        out << "\n";
    }
    if (r.m) print_matrix_table(out, *r.m);
    if (r.mfpt_errors)
        out << "mfpt residuals:        min " << num15(r.mfpt_errors->min_abs) << "  max "
            << num15(r.mfpt_errors->max_abs) << "  sum " << num15(r.mfpt_errors->residual) << "\n";
    if (r.stationary_errors)
        out << "stationary residuals:  min " << num15(r.stationary_errors->min_abs) << "  max "
            << num15(r.stationary_errors->max_abs) << "  sum "
            << num15(r.stationary_errors->residual) << "\n";
    if (r.compare) {
        const CompareReport& c = *r.compare;
        auto line3 = [&](const char* name, double a, double b, double s) {
            out << name << "  min " << num15(a) << "  max " << num15(b) << "  sum " << num15(s)
                << "\n";
        };
        line3("mfpt residuals (double):         ", c.mfpt_double.min_abs, c.mfpt_double.max_abs,
              c.mfpt_double.residual);
        line3("mfpt residuals (single):         ", c.mfpt_single.min_abs, c.mfpt_single.max_abs,
              c.mfpt_single.residual);
        if (c.mfpt_comparison.accurate_digits)
            out << "accurate digits:                   "
                << fmt("%.4f", *c.mfpt_comparison.accurate_digits);
        else
            out << "accurate digits:                   (all entries agree exactly)";
        if (!c.mfpt_comparison.excluded_pairs.empty()) {
            out << "  excluded:";
            for (const auto& [i, j] : c.mfpt_comparison.excluded_pairs)
                out << " (" << i << "," << j << ")";
        }
        out << "\n";
        line3("pi residuals egth (double):      ", c.stationary_double.min_abs,
              c.stationary_double.max_abs, c.stationary_double.residual);
        line3("pi residuals egth (single):      ", c.stationary_single.min_abs,
              c.stationary_single.max_abs, c.stationary_single.residual);
        line3("pi residuals gth (double):       ", c.gth_stationary_double.min_abs,
              c.gth_stationary_double.max_abs, c.gth_stationary_double.residual);
        line3("pi residuals gth (single):       ", c.gth_stationary_single.min_abs,
              c.gth_stationary_single.max_abs, c.gth_stationary_single.residual);
        line3("pi single-double diff (egth):    ", c.pi_comparison.min_abs, c.pi_comparison.max_abs,
              c.pi_comparison.relative_error);
        line3("pi single-double diff (gth):     ", c.gth_pi_comparison.min_abs,
              c.gth_pi_comparison.max_abs, c.gth_pi_comparison.relative_error);
    }
}

void print_csv(std::ostream& out, const RunReport& r, bool with_timestamp) {
    out << "problem," << r.problem << "\n";
    out << "precision," << r.precision << "\n";
    out << "algorithm," << r.algorithm << "\n";
    if (with_timestamp) out << "timestamp," << timestamp_utc() << "\n";
    if (r.pi) {
        out << "pi";
        for (Index i = 0; i < r.pi->size(); ++i) out << ',' << num15((*r.pi)(i));
        out << "\n";
    }
    if (r.m)
        for (Index i = 0; i < r.m->rows(); ++i) {
            out << "m," << (i + 1);
            for (Index j = 0; j < r.m->cols(); ++j) out << ',' << num15((*r.m)(i, j));
            out << "\n";
        }
    if (r.mfpt_errors)
        out << "errors_mfpt," << num15(r.mfpt_errors->min_abs) << ','
            << num15(r.mfpt_errors->max_abs) << ',' << num15(r.mfpt_errors->residual) << "\n";
    if (r.stationary_errors)
        out << "errors_stationary," << num15(r.stationary_errors->min_abs) << ','
            << num15(r.stationary_errors->max_abs) << ',' << num15(r.stationary_errors->residual)
            << "\n";
    if (r.digits) {
        out << "accurate_digits,"
            << (r.digits->accurate_digits ? fmt("%.14e", *r.digits->accurate_digits) : "") << "\n";
        out << "excluded_pairs";
        for (const auto& [i, j] : r.digits->excluded_pairs) out << ',' << i << ':' << j;
        out << "\n";
    }
    if (r.compare) {
        const CompareReport& c = *r.compare;
        auto row = [&](const char* k, double mn, double mx, double sum) {
            out << k << ',' << num15(mn) << ',' << num15(mx) << ',' << num15(sum) << "\n";
        };
        row("mfpt_residuals_double", c.mfpt_double.min_abs, c.mfpt_double.max_abs,
            c.mfpt_double.residual);
        row("mfpt_residuals_single", c.mfpt_single.min_abs, c.mfpt_single.max_abs,
            c.mfpt_single.residual);
        row("pi_residuals_egth_double", c.stationary_double.min_abs, c.stationary_double.max_abs,
            c.stationary_double.residual);
        row("pi_residuals_egth_single", c.stationary_single.min_abs, c.stationary_single.max_abs,
            c.stationary_single.residual);
        row("pi_residuals_gth_double", c.gth_stationary_double.min_abs,
            c.gth_stationary_double.max_abs, c.gth_stationary_double.residual);
        row("pi_residuals_gth_single", c.gth_stationary_single.min_abs,
            c.gth_stationary_single.max_abs, c.gth_stationary_single.residual);
        row("pi_diff_egth", c.pi_comparison.min_abs, c.pi_comparison.max_abs,
            c.pi_comparison.relative_error);
        row("pi_diff_gth", c.gth_pi_comparison.min_abs, c.gth_pi_comparison.max_abs,
            c.gth_pi_comparison.relative_error);
        row("m_diff", c.mfpt_comparison.min_abs, c.mfpt_comparison.max_abs,
            c.mfpt_comparison.relative_error);
    }
}

void emit(std::ostream& out, const RunReport& r, const std::string& format, bool with_timestamp) {
    if (format == "json")
        out << to_json(r, with_timestamp);
    else if (format == "csv")
        print_csv(out, r, with_timestamp);
    else
        print_table(out, r, with_timestamp);
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_stationary(const CommonOptions& opt, bool with_timestamp, std::ostream& out) {
    const LoadedInput in = load_input(opt);
    RunReport rep;
    rep.problem = in.label;
    rep.precision = opt.precision;
    rep.algorithm = opt.algorithm;
    if (opt.precision == "single") {
        const MarkovRenewalProcess<float> mrp = in.mrp.cast<float>();
        const MfptMatrix<float> m = run_mfpt(opt.algorithm, mrp);
        const StationaryDistribution<float> pi = stationary_from_mfpt(m, mrp);
        rep.pi = pi.vector().cast<double>();
        const StationaryErrorReport e = stationary_residual(pi, mrp.p());
        rep.stationary_errors = e;
    } else {
        const MfptMatrix<double> m = run_mfpt(opt.algorithm, in.mrp);
        const StationaryDistribution<double> pi = stationary_from_mfpt(m, in.mrp);
        rep.pi = pi.vector();
        rep.stationary_errors = stationary_residual(pi, in.mrp.p());
    }
    emit(out, rep, opt.report, with_timestamp);
    return kExitOk;
}

int cmd_mfpt(const CommonOptions& opt, bool with_timestamp, std::ostream& out) {
    const LoadedInput in = load_input(opt);
    RunReport rep;
    rep.problem = in.label;
    rep.precision = opt.precision;
    rep.algorithm = opt.algorithm;
    if (opt.precision == "single") {
        const MarkovRenewalProcess<float> mrp = in.mrp.cast<float>();
        const MfptMatrix<float> m = run_mfpt(opt.algorithm, mrp);
        const StationaryDistribution<float> pi = stationary_from_mfpt(m, mrp);
        rep.m = m.matrix().cast<double>();
        rep.pi = pi.vector().cast<double>();
        rep.mfpt_errors = mfpt_residual(m, mrp);
        rep.stationary_errors = stationary_residual(pi, mrp.p());
    } else {
        const MfptMatrix<double> m = run_mfpt(opt.algorithm, in.mrp);
        const StationaryDistribution<double> pi = stationary_from_mfpt(m, in.mrp);
        rep.m = m.matrix();
        rep.pi = pi.vector();
        rep.mfpt_errors = mfpt_residual(m, in.mrp);
        rep.stationary_errors = stationary_residual(pi, in.mrp.p());
    }
    emit(out, rep, opt.report, with_timestamp);
    return kExitOk;
}

int cmd_compare(const CommonOptions& opt, bool with_timestamp, std::ostream& out) {
    const LoadedInput in = load_input(opt);
    const CompareReport cmp = compare_precisions(in.mrp);

    RunReport rep;
    rep.problem = in.label;
    rep.precision = "single";
    rep.algorithm = "egth";
    const MarkovRenewalProcess<float> mrp_s = in.mrp.cast<float>();
    const MfptMatrix<float> m_s = mfpt_egth(mrp_s);
    rep.m = m_s.matrix().cast<double>();
    rep.pi = stationary_from_mfpt(m_s, mrp_s).vector().cast<double>();
    rep.mfpt_errors = cmp.mfpt_single;
    rep.stationary_errors = cmp.stationary_single;
    rep.digits = cmp.mfpt_comparison;
    rep.compare = cmp;
    emit(out, rep, opt.report, with_timestamp);
    return kExitOk;
}

int cmd_verify(const std::string& corpus_sel, const std::string& format, bool with_timestamp,
               std::ostream& out) {
    std::vector<std::string> selection;
    if (corpus_sel == "all" || corpus_sel.empty()) {
        for (const auto& id : corpus::ids())
            if (corpus::load(id).golden_m) selection.push_back(id);
    } else {
        if (!corpus::is_known(corpus_sel)) throw UnknownProblem(corpus_sel);
        selection.push_back(corpus_sel);
    }

    struct Verdict {
        std::string id;
        double m_excess;
        double gth_pi_err;
        double egth_pi_err;
        double pi_tol;
        bool pass;
    };
    std::vector<Verdict> verdicts;
    for (const auto& id : selection) {
        const corpus::TestProblem tp = corpus::load(id);
        if (!tp.golden_m || !tp.golden_pi)
            throw UnknownProblem(id + " has no reference data to verify against");
        const MarkovRenewalProcess<double> mrp = MarkovRenewalProcess<double>::chain(tp.p);
        const MfptMatrix<double> m = mfpt_egth(mrp);
        const StationaryDistribution<double> egth_pi = stationary_from_mfpt(m, mrp);
        const StationaryDistribution<double> gth_pi = stationary_gth(tp.p);

        Verdict v;
        v.id = id;
        v.m_excess = corpus::golden_mfpt_excess(m, tp);
        v.pi_tol = corpus::golden_pi_abs_tol(id);
        v.gth_pi_err = 0;
        v.egth_pi_err = 0;
        for (Index i = 0; i < tp.golden_pi->size(); ++i) {
            v.gth_pi_err = std::max(v.gth_pi_err, std::fabs(gth_pi(i) - (*tp.golden_pi)(i)));
            v.egth_pi_err = std::max(v.egth_pi_err, std::fabs(egth_pi(i) - (*tp.golden_pi)(i)));
        }
        v.pass = v.m_excess <= 1.0 && v.gth_pi_err <= v.pi_tol && v.egth_pi_err <= v.pi_tol;
        verdicts.push_back(v);
    }

    bool all_pass = true;
    for (const auto& v : verdicts) all_pass = all_pass && v.pass;

    if (format == "json") {
        std::string s = "{\"problems\":[";
        for (size_t k = 0; k < verdicts.size(); ++k) {
            const auto& v = verdicts[k];
            if (k) s += ',';
            s += "{\"problem\":\"" + v.id + "\",\"pass\":" + (v.pass ? "true" : "false") +
                 ",\"m_error_over_allowance\":" + num15(v.m_excess) +
                 ",\"gth_pi_max_abs_error\":" + num15(v.gth_pi_err) +
                 ",\"egth_pi_max_abs_error\":" + num15(v.egth_pi_err) +
                 ",\"pi_tolerance\":" + num15(v.pi_tol) + "}";
        }
        s += "],\"pass\":";
        s += all_pass ? "true" : "false";
        if (with_timestamp) s += ",\"timestamp\":\"" + timestamp_utc() + "\"";
        s += "}\n";
        out << s;
    } else {
        if (with_timestamp) out << "timestamp: " << timestamp_utc() << "\n";
        for (const auto& v : verdicts) {
            out << (v.pass ? "PASS" : "FAIL") << "  " << v.id
                << "  m error/allowance " << fmt("%.3f", v.m_excess) << "  gth pi "
                << fmt("%.2e", v.gth_pi_err) << "  egth pi " << fmt("%.2e", v.egth_pi_err)
                << "  (pi tol " << fmt("%.0e", v.pi_tol) << ")\n";
        }
        out << (all_pass ? "all reference checks passed" : "reference checks FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitGolden;
}

int cmd_corpus(bool list, const std::string& show_id, const std::string& export_dir,
               std::ostream& out) {
    if (list) {
        for (const auto& id : corpus::ids()) {
            const corpus::TestProblem tp = corpus::load(id);
            out << id << "  " << tp.p.size() << " states"
                << (tp.golden_m ? "" : "  (no reference data)") << "\n";
        }
        return kExitOk;
    }
    if (!show_id.empty()) {
        const corpus::TestProblem tp = corpus::load(show_id);
        out << serialize_matrix_document(MarkovRenewalProcess<double>::chain(tp.p));
        return kExitOk;
    }
    if (!export_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(export_dir, ec);
        for (const auto& id : corpus::ids()) {
            const corpus::TestProblem tp = corpus::load(id);
            const fs::path path = fs::path(export_dir) / (id + ".mat");
            std::ofstream file(path, std::ios::binary);
            if (!file) throw ValidationError("cannot write '" + path.string() + "'");
            file << serialize_matrix_document(MarkovRenewalProcess<double>::chain(tp.p));
        }
        out << "wrote " << corpus::ids().size() << " matrix documents to " << export_dir << "\n";
        return kExitOk;
    }
    throw ValidationError("corpus requires one of: list, show <id>, export <dir>");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stationary distributions and mean first passage times of finite chains "
                 "via subtraction-free state reduction"};
    app.name("egth");
    app.require_subcommand(1);
    app.fallthrough();

    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from reports");

    CommonOptions sta_opt, mfpt_opt, cmp_opt;
    auto* sta = app.add_subcommand("stationary", "stationary distribution of a chain");
    add_common(sta, sta_opt);
    auto* mf = app.add_subcommand("mfpt", "mean first passage time matrix");
    add_common(mf, mfpt_opt);
    auto* cmp = app.add_subcommand("compare", "single vs double precision study");
    add_common(cmp, cmp_opt, /*with_precision=*/false, /*with_algorithm=*/false);

    std::string verify_sel = "all";
    std::string verify_report = "table";
    auto* ver = app.add_subcommand("verify", "check computed results against reference data");
    ver->add_option("--corpus", verify_sel, "test problem id or 'all'");
    ver->add_option("--report", verify_report, "table or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    auto* cor = app.add_subcommand("corpus", "inspect or export the bundled test problems");
    bool cor_list = false;
    std::string cor_show, cor_export;
    auto* cl = cor->add_subcommand("list", "list problem ids");
    auto* cs = cor->add_subcommand("show", "print one problem as a matrix document");
    cs->add_option("id", cor_show, "problem id")->required();
    auto* ce = cor->add_subcommand("export", "write all problems as .mat files");
    ce->add_option("dir", cor_export, "output directory")->required();
    cor->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("egth");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (sta->parsed()) return cmd_stationary(sta_opt, !no_timestamp, out);
        if (mf->parsed()) return cmd_mfpt(mfpt_opt, !no_timestamp, out);
        if (cmp->parsed()) return cmd_compare(cmp_opt, !no_timestamp, out);
        if (ver->parsed()) return cmd_verify(verify_sel, verify_report, !no_timestamp, out);
        if (cor->parsed()) {
            cor_list = cl->parsed();
            return cmd_corpus(cor_list, cs->parsed() ? cor_show : "",
                              ce->parsed() ? cor_export : "", out);
        }
        err << "error: no subcommand\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const AlgorithmError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAlgorithm;
    }
}

}  // namespace egth::cli
