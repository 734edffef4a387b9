#include "derivspace/genericity.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>

#include "derivspace/derivatives.hpp"
#include "derivspace/error.hpp"
#include "derivspace/reconstruct.hpp"
#include "derivspace/serialize.hpp"

namespace derivspace {

using nlohmann::json;

GenericityProfile profile(const HomPoly& f)
{
    if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "profile of the zero polynomial");
    GenericityProfile p{f.vars(), f.degree(), {}, {}};
    for (int k = 0; k <= f.degree(); ++k) {
        const std::size_t dim = e_dim(f, k);
        p.dims.push_back(dim);
        p.member.push_back(dim == graded_dim(f.vars(), k));
    }
#ifdef DERIVSPACE_CHECKED
    if (!chain_violations(p).empty()) throw std::logic_error("U_{n,d}(k) chain is not nested");
#endif
    return p;
}

std::vector<int> chain_violations(const GenericityProfile& p)
{
    std::vector<int> out;
    for (std::size_t k = 1; k < p.member.size(); ++k) {
        if (p.member[k] && !p.member[k - 1]) out.push_back(static_cast<int>(k));
    }
    return out;
}

std::vector<int> rank_bound_violations(const GenericityProfile& p)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < p.dims.size(); ++k) {
        if (p.dims[k] > e_dim_bound(p.n, p.d, static_cast<int>(k))) out.push_back(static_cast<int>(k));
    }
    return out;
}

HomPoly sample(int n, int d, long bound, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    HomPoly f(n, d);
    for (const auto& exps : enumerate(n, d)) f.add_term(exps, Rational(coeff(rng)));
    return f;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt)
{
    // splitmix64 finalizer over the (seed, trial, attempt) triple
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ trial) ^ (attempt * 0xd1b54a32d192ed03ULL));
}

bool certify_generic(const HomPoly& f, int k)
{
    if (k < 0 || k > f.degree()) return false;
    // Cheap rejection before the elimination: the rank bound.
    if (graded_dim(f.vars(), k) > graded_dim(f.vars(), f.degree() - k)) return false;
    return e_dim(f, k) == graded_dim(f.vars(), k);
}

HomPoly projective_normal(const HomPoly& f)
{
    if (f.is_zero()) return f;
    return scaled(1 / f.terms().begin()->second, f);
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

bool Fingerprint::operator==(const Fingerprint& other) const
{
    if (n != other.n || d != other.d || k != other.k || digest != other.digest) return false;
    return subspace_equal(canonical, other.canonical);
}

Fingerprint fingerprint(const HomPoly& f, int k)
{
    if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "fingerprint of the zero polynomial");
    if (k < 0 || k > f.degree()) {
        throw DomainError(ErrorKind::OrderOutOfRange,
                          "k=" + std::to_string(k) + " outside [0, " + std::to_string(f.degree()) + "]");
    }
    Fingerprint fp{f.vars(), f.degree(), k, e_space(f, k), {}};
    fp.digest = sha256_hex(to_json(fp.canonical).dump());
    return fp;
}

json to_json(const GenericityProfile& p)
{
    return json{{"n", p.n}, {"d", p.d}, {"dims", p.dims}, {"member", p.member},
                {"chain_violations", chain_violations(p)}};
}

json to_json(const Fingerprint& fp)
{
    return json{{"n", fp.n}, {"d", fp.d}, {"k", fp.k}, {"digest", fp.digest},
                {"canonical", to_json(fp.canonical)}};
}

std::string experiment_kind_name(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Genericity: return "genericity";
    case ExperimentKind::Theorem: return "theorem";
    case ExperimentKind::Collision: return "collision";
    case ExperimentKind::Chain: return "chain";
    }
    return "genericity";
}

ExperimentKind parse_experiment_kind(const std::string& name)
{
    for (auto kind : {ExperimentKind::Genericity, ExperimentKind::Theorem, ExperimentKind::Collision,
                      ExperimentKind::Chain}) {
        if (experiment_kind_name(kind) == name) return kind;
    }
    throw DomainError(ErrorKind::ConfigInvalid, "unknown experiment kind '" + name + "'");
}

void validate(const ExperimentConfig& c)
{
    auto fail = [](const std::string& what) { throw DomainError(ErrorKind::ConfigInvalid, what); };
    if (c.trials <= 0) fail("trials must be positive");
    if (c.n < 0) fail("n must be nonnegative");
    if (c.d < 0) fail("d must be nonnegative");
    if (c.k < 0) fail("k must be nonnegative");
    if (c.k > c.d) fail("k must not exceed d");
    if (c.bound < 1) fail("bound must be at least 1");
    if (c.max_resamples < 0) fail("max_resamples must be nonnegative");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Sampled {
    HomPoly f;
    std::uint64_t seed;
    int resamples;
    bool certified;
};

// Draws from successive substreams until f lies in U_{n,d}(order).
Sampled sample_certified(const ExperimentConfig& c, int trial, int order)
{
    for (int attempt = 0;; ++attempt) {
        const std::uint64_t s = substream_seed(c.seed, static_cast<std::uint64_t>(trial),
                                               static_cast<std::uint64_t>(attempt));
        HomPoly f = sample(c.n, c.d, c.bound, s);
        const bool ok = !f.is_zero() && certify_generic(f, order);
        if (ok || attempt == c.max_resamples) return {std::move(f), s, attempt, ok};
    }
}

TrialRecord base_record(const ExperimentConfig& c, int trial)
{
    TrialRecord r;
    r.trial = trial;
    r.n = c.n;
    r.d = c.d;
    r.k = c.k;
    return r;
}

TrialRecord genericity_trial(const ExperimentConfig& c, int trial)
{
    TrialRecord r = base_record(c, trial);
    const std::uint64_t s = substream_seed(c.seed, static_cast<std::uint64_t>(trial));
    const HomPoly f = sample(c.n, c.d, c.bound, s);
    r.seed = s;
    r.polynomial = print_poly(f);
    r.dim_ek = e_dim(f, c.k);
    r.certified = r.dim_ek == graded_dim(c.n, c.k);
    r.verdict = r.certified ? "GENERIC" : "DEGENERATE";
    return r;
}

TrialRecord theorem_trial(const ExperimentConfig& c, int trial)
{
    TrialRecord r = base_record(c, trial);
    Sampled smp = sample_certified(c, trial, c.k + 1);
    r.seed = smp.seed;
    r.resamples = smp.resamples;
    r.polynomial = print_poly(smp.f);
    const TheoremReport rep = verify_theorem(smp.f, c.k);
    r.certified = rep.hypothesis;
    r.dim_ek = rep.chain_dims[static_cast<std::size_t>(c.k)];
    r.verdict = std::string(verdict_name(rep.result.verdict));
    r.solution_dim = rep.result.solution_dim;
    r.detail = json{{"proportional", rep.witness.has_value()},
                    {"contradiction", rep.contradiction},
                    {"chain_ok", rep.chain_ok},
                    {"chain_dims", rep.chain_dims}};
    return r;
}

TrialRecord chain_record(const ExperimentConfig& c, int trial, const HomPoly& f)
{
    TrialRecord r = base_record(c, trial);
    r.polynomial = print_poly(f);
    const GenericityProfile p = profile(f);
    const auto chain = chain_violations(p);
    const auto bound = rank_bound_violations(p);
    r.certified = p.member[static_cast<std::size_t>(c.k)];
    r.dim_ek = p.dims[static_cast<std::size_t>(c.k)];
    r.verdict = chain.empty() && bound.empty() ? "OK" : "VIOLATION";
    r.detail = json{{"dims", p.dims}, {"member", p.member}, {"chain_violations", chain},
                    {"rank_bound_violations", bound}};
    return r;
}

TrialRecord chain_trial(const ExperimentConfig& c, int trial)
{
    const std::uint64_t s = substream_seed(c.seed, static_cast<std::uint64_t>(trial));
    HomPoly f = sample(c.n, c.d, c.bound, s);
    if (f.is_zero()) f = HomPoly::monomial(enumerate(c.n, c.d).front());
    TrialRecord r = chain_record(c, trial, f);
    r.seed = s;
    return r;
}

std::vector<std::pair<std::string, HomPoly>> chain_specials(int n, int d)
{
    std::vector<std::pair<std::string, HomPoly>> out;
    std::vector<int> pure(n + 1, 0);
    pure[0] = d;
    out.emplace_back("monomial", HomPoly::monomial(MultiIndex(pure)));
    HomPoly fermat(n, d);
    for (int i = 0; i <= n; ++i) {
        std::vector<int> e(n + 1, 0);
        e[i] = d;
        fermat.add_term(MultiIndex(e), 1);
    }
    out.emplace_back("fermat", std::move(fermat));
    if (n >= 1 && d >= 1) {
        std::vector<int> e(n + 1, 0);
        e[0] = d - 1;
        e[1] = 1;
        out.emplace_back("x0^(d-1)*x1", HomPoly::monomial(MultiIndex(e)));
    }
    return out;
}

struct CollisionWork {
    Sampled smp;
    HomPoly normal{0, 0};
    std::optional<Fingerprint> fp;
};

CollisionWork collision_prepare(const ExperimentConfig& c, int trial)
{
    CollisionWork w{sample_certified(c, trial, c.k + 1), HomPoly(0, 0), std::nullopt};
    if (!w.smp.f.is_zero()) {
        w.normal = projective_normal(w.smp.f);
        w.fp = fingerprint(w.smp.f, c.k);
    }
    return w;
}

template <class Work>
std::vector<Work> run_trials(const ExperimentConfig& c, Work (*fn)(const ExperimentConfig&, int),
                             std::vector<double>& elapsed)
{
    std::vector<std::optional<Work>> slots(static_cast<std::size_t>(c.trials));
    elapsed.assign(slots.size(), 0.0);
    std::exception_ptr failure;
    std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < c.trials; ++t) {
        try {
            const auto start = Clock::now();
            slots[static_cast<std::size_t>(t)] = fn(c, t);
            elapsed[static_cast<std::size_t>(t)] =
                std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Work> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void collision_pass(const ExperimentConfig& c, std::vector<CollisionWork>& work,
                    const std::vector<double>& elapsed, ExperimentReport& report)
{
    std::map<std::string, int> by_polynomial;
    std::map<std::string, std::vector<int>> by_digest;
    for (int t = 0; t < c.trials; ++t) {
        auto& w = work[static_cast<std::size_t>(t)];
        TrialRecord r = base_record(c, t);
        r.seed = w.smp.seed;
        r.resamples = w.smp.resamples;
        r.certified = w.smp.certified;
        r.polynomial = print_poly(w.smp.f);
        if (c.timings) r.elapsed_ms = elapsed[static_cast<std::size_t>(t)];
        if (!w.fp) {
            r.verdict = "SKIPPED";
            report.records.push_back(std::move(r));
            continue;
        }
        r.dim_ek = w.fp->canonical.dim();
        r.detail["digest"] = w.fp->digest;

        const std::string key = print_poly(w.normal);
        if (auto it = by_polynomial.find(key); it != by_polynomial.end()) {
            r.verdict = "DUPLICATE";
            r.detail["duplicate_of"] = it->second;
            ++report.summary.duplicates;
            report.records.push_back(std::move(r));
            continue;
        }
        by_polynomial.emplace(key, t);

        r.verdict = "DISTINCT";
        auto& same_digest = by_digest[w.fp->digest];
        for (int other : same_digest) {
            // digest match: confirm or refute by exact subspace comparison
            if (subspace_equal(work[static_cast<std::size_t>(other)].fp->canonical, w.fp->canonical)) {
                r.verdict = "COLLISION";
                r.detail["collides_with"] = other;
                ++report.summary.collisions;
                break;
            }
            ++report.summary.digest_clashes;
        }
        same_digest.push_back(t);
        report.records.push_back(std::move(r));
    }
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& config)
{
    validate(config);
    ExperimentReport report{config, {}, {}};
    std::vector<double> elapsed;

    switch (config.kind) {
    case ExperimentKind::Genericity:
        report.records = run_trials<TrialRecord>(config, genericity_trial, elapsed);
        break;
    case ExperimentKind::Theorem:
        report.records = run_trials<TrialRecord>(config, theorem_trial, elapsed);
        break;
    case ExperimentKind::Chain:
        report.records = run_trials<TrialRecord>(config, chain_trial, elapsed);
        break;
    case ExperimentKind::Collision: {
        auto work = run_trials<CollisionWork>(config, collision_prepare, elapsed);
        collision_pass(config, work, elapsed, report);
        report.summary.theorem_applies = 2 * config.k + 2 <= config.d;
        break;
    }
    }
    if (config.timings && config.kind != ExperimentKind::Collision) {
        for (std::size_t t = 0; t < report.records.size(); ++t) report.records[t].elapsed_ms = elapsed[t];
    }
    if (config.kind == ExperimentKind::Chain) {
        int next = config.trials;
        for (auto& [name, f] : chain_specials(config.n, config.d)) {
            TrialRecord r = chain_record(config, next++, f);
            r.source = name;
            report.records.push_back(std::move(r));
        }
    }

    auto& s = report.summary;
    s.trials = config.trials;
    for (const auto& r : report.records) {
        if (r.certified) ++s.certified;
        s.rejected_samples += r.resamples;
        if (r.verdict == "UNIQUE") ++s.unique;
        if (r.detail.contains("contradiction") && r.detail["contradiction"].get<bool>()) ++s.contradictions;
        if (r.detail.contains("chain_violations")) {
            s.chain_violations += static_cast<int>(r.detail["chain_violations"].size());
            s.rank_bound_violations += static_cast<int>(r.detail["rank_bound_violations"].size());
        }
    }
    return report;
}

void write_csv(const ExperimentReport& report, std::ostream& out)
{
    out << "trial,seed,n,d,k,certified,dimE_k,verdict,solution_dim,elapsed_ms\n";
    for (const auto& r : report.records) {
        out << r.trial << ',';
        if (r.seed) out << *r.seed;
        out << ',' << r.n << ',' << r.d << ',' << r.k << ',' << (r.certified ? "true" : "false") << ','
            << r.dim_ek << ',' << r.verdict << ',';
        if (r.solution_dim) out << *r.solution_dim;
        out << ',';
        if (r.elapsed_ms) out << *r.elapsed_ms;
        out << '\n';
    }
}

json to_json(const ExperimentReport& report)
{
    const auto& c = report.config;
    json config{{"kind", experiment_kind_name(c.kind)},
                {"n", c.n},
                {"d", c.d},
                {"k", c.k},
                {"trials", c.trials},
                {"bound", c.bound},
                {"seed", c.seed},
                {"max_resamples", c.max_resamples},
                {"timings", c.timings}};
    json records = json::array();
    for (const auto& r : report.records) {
        json row{{"trial", r.trial},
                 {"source", r.source},
                 {"n", r.n},
                 {"d", r.d},
                 {"k", r.k},
                 {"certified", r.certified},
                 {"dimE_k", r.dim_ek},
                 {"verdict", r.verdict},
                 {"resamples", r.resamples},
                 {"polynomial", r.polynomial},
                 {"detail", r.detail}};
        row["seed"] = r.seed ? json(*r.seed) : json(nullptr);
        row["solution_dim"] = r.solution_dim ? json(*r.solution_dim) : json(nullptr);
        row["elapsed_ms"] = r.elapsed_ms ? json(*r.elapsed_ms) : json(nullptr);
        records.push_back(std::move(row));
    }
    const auto& s = report.summary;
    json summary{{"trials", s.trials},
                 {"certified", s.certified},
                 {"rejected_samples", s.rejected_samples},
                 {"unique", s.unique},
                 {"contradictions", s.contradictions},
                 {"chain_violations", s.chain_violations},
                 {"rank_bound_violations", s.rank_bound_violations},
                 {"duplicates", s.duplicates},
                 {"digest_clashes", s.digest_clashes},
                 {"collisions", s.collisions},
                 {"theorem_applies", s.theorem_applies}};
    return json{{"config", std::move(config)}, {"summary", std::move(summary)},
                {"records", std::move(records)}};
}

} // namespace derivspace
