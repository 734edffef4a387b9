#include "derivspace/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "derivspace/derivatives.hpp"
#include "derivspace/error.hpp"
#include "derivspace/genericity.hpp"
#include "derivspace/reconstruct.hpp"
#include "derivspace/serialize.hpp"

namespace derivspace::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n;
    std::optional<int> d;
    std::optional<int> k;
    std::string index;
    std::string poly_text;
    std::string poly_file;
    std::string g_text;
    std::string dual_text;
    std::string span_file;
    int trials = 100;
    long bound = 1000;
    std::uint64_t seed = 0;
    int trial = 0;
    std::string kind = "genericity";
    std::string format = "text";
    std::string output;
    bool timings = false;
};

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("DERIVSPACE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("DERIVSPACE_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int require(const std::optional<int>& v, const char* flag)
{
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

HomPoly polynomial(const Options& o)
{
    const int n = require(o.n, "-n");
    if (!o.poly_text.empty() && !o.poly_file.empty()) throw UsageError("-p and -f are exclusive");
    if (o.poly_text.empty() && o.poly_file.empty()) throw UsageError("missing polynomial (-p or -f)");
    const std::string text = o.poly_text.empty() ? read_file(o.poly_file) : o.poly_text;
    return parse_poly(text, n, o.d);
}

HomPoly second_polynomial(const Options& o)
{
    if (o.g_text.empty()) throw UsageError("missing second polynomial (-g)");
    return parse_poly(o.g_text, require(o.n, "-n"), o.d);
}

class Output {
public:
    Output(const Options& o, std::ostream& fallback) : format_(o.format)
    {
        if (!o.output.empty()) {
            file_.open(o.output);
            if (!file_) throw UsageError("cannot write '" + o.output + "'");
        }
        out_ = o.output.empty() ? &fallback : &file_;
    }

    bool json_mode() const { return format_ == "json"; }
    bool csv_mode() const { return format_ == "csv"; }
    std::ostream& stream() { return *out_; }

    void emit(const json& j) { *out_ << j.dump(2) << '\n'; }
    void line(const std::string& s) { *out_ << s << '\n'; }

private:
    std::string format_;
    std::ofstream file_;
    std::ostream* out_;
};

std::string matrix_text(const ExactMatrix& m)
{
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += to_string(m(r, c));
        }
        s += '\n';
    }
    return s;
}

std::string bools(const std::vector<bool>& v)
{
    std::string s;
    for (bool b : v) s += b ? 'T' : 'F';
    return s;
}

template <class T>
std::string joined(const std::vector<T>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_dims(const Options& o, Output& out)
{
    const int n = require(o.n, "-n");
    const int d = require(o.d, "-d");
    const std::size_t dim = graded_dim(n, d);
    if (out.json_mode()) out.emit(json{{"n", n}, {"d", d}, {"dim", dim}});
    else out.line(std::to_string(dim));
    return kExitOk;
}

int cmd_diff(const Options& o, Output& out)
{
    const HomPoly f = polynomial(o);
    if (o.index.empty()) throw UsageError("missing required flag -I");
    const MultiIndex index = parse_multiindex(o.index);
    const HomPoly r = derivative(f, index);
    if (out.json_mode()) {
        out.emit(json{{"f", print_poly(f)}, {"index", index.to_string()}, {"degree", r.degree()},
                      {"result", print_poly(r)}});
    } else {
        out.line(print_poly(r));
    }
    return kExitOk;
}

int cmd_apolar(const Options& o, Output& out)
{
    const HomPoly f = polynomial(o);
    if (o.dual_text.empty()) throw UsageError("missing dual polynomial (-P)");
    const HomPoly dual = parse_poly(o.dual_text, f.vars(), std::nullopt, 'y');
    const HomPoly r = apolar_pair(dual, f);
    if (out.json_mode()) {
        out.emit(json{{"P", print_poly(dual, 'y')}, {"f", print_poly(f)}, {"result", print_poly(r)}});
    } else {
        out.line(print_poly(r));
    }
    return kExitOk;
}

int cmd_cat_matrix(const Options& o, Output& out)
{
    const Catalecticant c = catalecticant(polynomial(o), require(o.k, "-k"));
    if (out.json_mode()) out.emit(to_json(c));
    else out.stream() << matrix_text(c.matrix);
    return kExitOk;
}

int cmd_ek_dim(const Options& o, Output& out)
{
    const HomPoly f = polynomial(o);
    const int k = require(o.k, "-k");
    const std::size_t dim = e_dim(f, k);
    if (out.json_mode()) {
        out.emit(json{{"k", k}, {"dim", dim}, {"full", graded_dim(f.vars(), k)},
                      {"bound", e_dim_bound(f.vars(), f.degree(), k)}});
    } else {
        out.line(std::to_string(dim));
    }
    return kExitOk;
}

int cmd_span(const Options& o, Output& out)
{
    out.emit(to_json(e_space(polynomial(o), require(o.k, "-k"))));
    return kExitOk;
}

int cmd_profile(const Options& o, Output& out)
{
    const GenericityProfile p = profile(polynomial(o));
    if (out.json_mode()) {
        out.emit(to_json(p));
    } else {
        out.line("dims   " + joined(p.dims));
        out.line("member " + bools(p.member));
    }
    return kExitOk;
}

int cmd_certify(const Options& o, Output& out)
{
    const HomPoly f = polynomial(o);
    const int k = require(o.k, "-k");
    const bool ok = certify_generic(f, k);
    if (out.json_mode()) out.emit(json{{"k", k}, {"certified", ok}, {"dim", e_dim(f, k)}});
    else out.line(ok ? "true" : "false");
    return kExitOk;
}

int cmd_reconstruct(const Options& o, Output& out)
{
    if (o.span_file.empty()) throw UsageError("missing required flag -V");
    json j;
    try {
        j = json::parse(read_file(o.span_file));
    } catch (const json::parse_error& e) {
        throw DomainError(ErrorKind::FormatError, e.what());
    }
    const Subspace span = subspace_from_json(j);
    const ReconstructionResult r =
        solve_from_span(span, require(o.n, "-n"), require(o.d, "-d"), require(o.k, "-k"));
    if (out.json_mode()) {
        out.emit(to_json(r));
    } else {
        out.line(std::string(verdict_name(r.verdict)) + " (solution_dim " +
                 std::to_string(r.solution_dim) + ")");
        for (const auto& h : r.basis) out.line("  " + print_poly(h));
    }
    return kExitOk;
}

int cmd_verify_theorem(const Options& o, Output& out)
{
    const TheoremReport t = verify_theorem(polynomial(o), require(o.k, "-k"));
    if (out.json_mode()) {
        out.emit(to_json(t));
    } else {
        out.line(std::string("within bound k <= d/2 - 1: ") + (t.within_bound ? "yes" : "no"));
        out.line(std::string("hypothesis dim E_{k+1} full: ") + (t.hypothesis ? "yes" : "no"));
        out.line("chain dims " + joined(t.chain_dims) + " full " + bools(t.chain_full));
        out.line(std::string("verdict ") + std::string(verdict_name(t.result.verdict)) +
                 " solution_dim " + std::to_string(t.result.solution_dim));
        if (t.witness) out.line("basis = " + to_string(*t.witness) + " * f");
        if (t.contradiction) out.line("CONTRADICTION: certified hypothesis without unique recovery");
    }
    return t.contradiction ? kExitTheoremViolation : kExitOk;
}

int cmd_verify_prop1(const Options& o, Output& out)
{
    const HomPoly f = polynomial(o);
    const HomPoly g = second_polynomial(o);
    const int k = require(o.k, "-k");
    const RelationMatrix a = extract_relations(f, g, k);
    const SymmetryReport sym = check_symmetry(a);

    json descent = json::array();
    bool descent_ok = true;
    bool euler_ok = true;
    if (sym.ok && k >= 1) {
        for (const auto& [index, h] : descend(f, a, k)) {
            const HomPoly direct = derivative(g, index);
            const bool same = h == direct;
            const bool euler = euler_lhs(direct) == scaled(f.degree() - k + 1, direct);
            descent_ok = descent_ok && same;
            euler_ok = euler_ok && euler;
            descent.push_back(json{{"K", index.to_string()}, {"descended", print_poly(h)},
                                   {"D_K g", print_poly(direct)}, {"equal", same}, {"euler", euler}});
        }
    }
    const bool ok = sym.ok && descent_ok && euler_ok;
    if (out.json_mode()) {
        out.emit(json{{"relations", to_json(a)}, {"symmetry", to_json(sym)}, {"descent", descent},
                      {"descent_ok", descent_ok}, {"euler_ok", euler_ok}, {"ok", ok}});
    } else {
        out.stream() << matrix_text(a.coefficients());
        out.line("symmetry violations " + std::to_string(sym.violations.size()));
        for (const auto& row : descent) {
            out.line("D_" + row["K"].get<std::string>() + " g = " + row["descended"].get<std::string>() +
                     (row["equal"].get<bool>() ? "" : "  (MISMATCH)"));
        }
    }
    return ok ? kExitOk : kExitTheoremViolation;
}

int cmd_fingerprint(const Options& o, Output& out)
{
    const Fingerprint fp = fingerprint(polynomial(o), require(o.k, "-k"));
    if (out.json_mode()) out.emit(to_json(fp));
    else out.line(fp.digest);
    return kExitOk;
}

ExperimentConfig experiment_config(const Options& o, ExperimentKind kind)
{
    ExperimentConfig c;
    c.kind = kind;
    c.n = require(o.n, "-n");
    c.d = require(o.d, "-d");
    c.k = require(o.k, "-k");
    c.trials = o.trials;
    c.bound = o.bound;
    c.seed = o.seed;
    c.timings = o.timings;
    return c;
}

int emit_report(const ExperimentReport& report, Output& out)
{
    if (out.csv_mode()) {
        write_csv(report, out.stream());
    } else if (out.json_mode()) {
        out.emit(to_json(report));
    } else {
        const auto& s = report.summary;
        out.line(experiment_kind_name(report.config.kind) + ": trials " + std::to_string(s.trials) +
                 ", certified " + std::to_string(s.certified) + ", rejected samples " +
                 std::to_string(s.rejected_samples) + ", unique " + std::to_string(s.unique) +
                 ", contradictions " + std::to_string(s.contradictions) + ", chain violations " +
                 std::to_string(s.chain_violations) + ", collisions " + std::to_string(s.collisions));
    }
    const bool broken = report.summary.contradictions > 0 || report.summary.chain_violations > 0 ||
                        report.summary.rank_bound_violations > 0 ||
                        (report.summary.collisions > 0 && report.summary.theorem_applies);
    return broken ? kExitTheoremViolation : kExitOk;
}

int cmd_collide(const Options& o, Output& out)
{
    if (!o.poly_text.empty() || !o.poly_file.empty()) {
        const int k = require(o.k, "-k");
        const Fingerprint a = fingerprint(polynomial(o), k);
        const Fingerprint b = fingerprint(second_polynomial(o), k);
        const bool same = a == b;
        if (out.json_mode()) {
            out.emit(json{{"k", k}, {"f", a.digest}, {"g", b.digest}, {"equal", same}});
        } else {
            out.line(same ? "equal" : "distinct");
        }
        return kExitOk;
    }
    return emit_report(run_experiment(experiment_config(o, ExperimentKind::Collision)), out);
}

int cmd_sample(const Options& o, Output& out)
{
    const int n = require(o.n, "-n");
    const int d = require(o.d, "-d");
    if (o.bound < 1) throw DomainError(ErrorKind::ConfigInvalid, "bound must be at least 1");
    const std::uint64_t s = substream_seed(o.seed, static_cast<std::uint64_t>(o.trial));
    const HomPoly f = sample(n, d, o.bound, s);
    if (out.json_mode()) out.emit(json{{"seed", s}, {"polynomial", print_poly(f)}});
    else out.line(print_poly(f));
    return kExitOk;
}

int cmd_experiment(const Options& o, Output& out)
{
    return emit_report(run_experiment(experiment_config(o, parse_experiment_kind(o.kind))), out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact derivative spaces of homogeneous polynomials", "derivspace"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed_default = 0;
    try {
        seed_default = default_seed();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    o.seed = seed_default;

    using Handler = int (*)(const Options&, Output&);
    struct Command {
        const char* name;
        const char* help;
        Handler handler;
        const char* flags;
    };
    // flags: n d k I p g P V t(trials/bound/seed) s(sample) e(experiment kind)
    const Command commands[] = {
        {"dims", "dim S_{n,d}", cmd_dims, "nd"},
        {"diff", "partial derivative D_I f", cmd_diff, "ndIp"},
        {"apolar", "apolar pairing <P, f>", cmd_apolar, "ndpP"},
        {"cat-matrix", "catalecticant matrix of order k", cmd_cat_matrix, "ndkp"},
        {"ek-dim", "dim E_k(f)", cmd_ek_dim, "ndkp"},
        {"span", "E_k(f) as subspace JSON", cmd_span, "ndkp"},
        {"profile", "dim E_k(f) for all k and U(k) membership", cmd_profile, "ndp"},
        {"certify", "full catalecticant rank at order k", cmd_certify, "ndkp"},
        {"reconstruct", "all g with E_k(g) inside a given span", cmd_reconstruct, "ndkV"},
        {"verify-theorem", "uniqueness check of f from E_k(f)", cmd_verify_theorem, "ndkp"},
        {"verify-prop1", "relations, symmetry and descent for (f, g, k)", cmd_verify_prop1, "ndkpg"},
        {"fingerprint", "digest of E_k(f)", cmd_fingerprint, "ndkp"},
        {"collide", "fingerprint collision search, or compare f and g", cmd_collide, "ndkpgt"},
        {"sample", "seeded random polynomial", cmd_sample, "ndts"},
        {"experiment", "seeded experiment with CSV/JSON report", cmd_experiment, "ndkte"},
    };

    Handler selected = nullptr;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        const std::string flags = c.flags;
        auto has = [&](char f) { return flags.find(f) != std::string::npos; };
        if (has('n')) sub->add_option("-n", o.n, "number of variables minus one");
        if (has('d')) sub->add_option("-d", o.d, "degree");
        if (has('k')) sub->add_option("-k", o.k, "derivative order");
        if (has('I')) sub->add_option("-I", o.index, "multi-index i0,i1,...,in");
        if (has('p')) {
            sub->add_option("-p", o.poly_text, "polynomial text");
            sub->add_option("-f", o.poly_file, "file holding the polynomial");
        }
        if (has('g')) sub->add_option("-g", o.g_text, "second polynomial text");
        if (has('P')) sub->add_option("-P", o.dual_text, "dual polynomial in y0..yn");
        if (has('V')) sub->add_option("-V", o.span_file, "subspace JSON file");
        if (has('t') || has('s')) {
            sub->add_option("--bound", o.bound, "coefficient bound");
            sub->add_option("--seed", o.seed, "seed (default $DERIVSPACE_SEED or 0)");
        }
        if (has('t')) {
            sub->add_option("--trials", o.trials, "number of trials");
            sub->add_flag("--timings", o.timings, "record per-trial wall-clock time");
        }
        if (has('s')) sub->add_option("--trial", o.trial, "substream index");
        if (has('e')) sub->add_option("--kind", o.kind, "genericity|theorem|collision|chain");
        sub->add_option("--format", o.format, "text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("-o", o.output, "output path");
        sub->callback([&selected, h = c.handler] { selected = h; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Output output(o, out);
        return selected(o, output);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

} // namespace derivspace::cli
