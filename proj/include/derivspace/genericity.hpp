#ifndef DERIVSPACE_GENERICITY_HPP
#define DERIVSPACE_GENERICITY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "derivspace/exactla.hpp"
#include "derivspace/polyring.hpp"

namespace derivspace {

/// dim E_k(f) for k = 0..d and membership of f in U_{n,d}(k), i.e. whether
/// E_k(f) has the full dimension dim S_{n,k}.
struct GenericityProfile {
    int n = 0;
    int d = 0;
    std::vector<std::size_t> dims;
    std::vector<bool> member;
};

/// Throws ZeroPolynomial for f == 0. With DERIVSPACE_CHECKED, a profile
/// that is not downward closed is a logic_error.
GenericityProfile profile(const HomPoly& f);

/// Orders k >= 1 where member[k] holds but member[k-1] does not.
std::vector<int> chain_violations(const GenericityProfile& p);

/// Orders k where dims[k] exceeds min(dim S_{n,k}, dim S_{n,d-k}).
std::vector<int> rank_bound_violations(const GenericityProfile& p);

/// Random polynomial with coefficients uniform in [-bound, bound], drawn
/// from a 64-bit Mersenne twister seeded with `seed`.
HomPoly sample(int n, int d, long bound, std::uint64_t seed);

/// Seed of the substream for (trial, attempt). Independent of the order in
/// which trials execute.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt = 0);

/// rank catalecticant(f, k) == dim S_{n,k}. False for k outside [0, d].
bool certify_generic(const HomPoly& f, int k);

/// Rescales f so its leading coefficient in canonical order is 1.
HomPoly projective_normal(const HomPoly& f);

/// Point of the Grassmannian [f] -> E_k(f) with a SHA-256 digest of its
/// canonical JSON serialization.
struct Fingerprint {
    int n = 0;
    int d = 0;
    int k = 0;
    Subspace canonical{0, 0};
    std::string digest;

    /// Digests are compared first; equal digests are confirmed exactly.
    bool operator==(const Fingerprint& other) const;
};

/// Throws ZeroPolynomial and OrderOutOfRange.
Fingerprint fingerprint(const HomPoly& f, int k);

std::string sha256_hex(const std::string& bytes);

nlohmann::json to_json(const GenericityProfile& p);
nlohmann::json to_json(const Fingerprint& fp);

// ---------------------------------------------------------------- harness

enum class ExperimentKind { Genericity, Theorem, Collision, Chain };

std::string experiment_kind_name(ExperimentKind kind);
/// Throws ConfigInvalid on unknown names.
ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Genericity;
    int n = 1;
    int d = 4;
    int k = 1;
    int trials = 100;
    long bound = 1000;
    std::uint64_t seed = 0;
    /// Fresh substreams tried before a trial is reported uncertified.
    int max_resamples = 16;
    /// Wall-clock timings make reports non-reproducible, so they are opt-in.
    bool timings = false;
};

/// Throws ConfigInvalid.
void validate(const ExperimentConfig& config);

struct TrialRecord {
    int trial = 0;
    /// Empty for the fixed special polynomials of the chain experiment.
    std::optional<std::uint64_t> seed;
    std::string source = "random";
    int n = 0;
    int d = 0;
    int k = 0;
    bool certified = false;
    std::size_t dim_ek = 0;
    std::string verdict;
    std::optional<std::size_t> solution_dim;
    std::optional<double> elapsed_ms;
    /// Samples rejected by certification before this one was accepted.
    int resamples = 0;
    std::string polynomial;
    nlohmann::json detail = nlohmann::json::object();
};

struct ExperimentSummary {
    int trials = 0;
    int certified = 0;
    int rejected_samples = 0;
    int unique = 0;
    int contradictions = 0;
    int chain_violations = 0;
    int rank_bound_violations = 0;
    int duplicates = 0;
    int digest_clashes = 0;
    int collisions = 0;
    /// The collision kind ran at an order k with 2k + 2 <= d.
    bool theorem_applies = false;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
};

/// Runs the trials (concurrently when OpenMP is enabled) and assembles the
/// records in trial order. The report is a function of the config alone.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Columns: trial,seed,n,d,k,certified,dimE_k,verdict,solution_dim,elapsed_ms
void write_csv(const ExperimentReport& report, std::ostream& out);
nlohmann::json to_json(const ExperimentReport& report);

} // namespace derivspace

#endif // DERIVSPACE_GENERICITY_HPP
