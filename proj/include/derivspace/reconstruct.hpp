#ifndef DERIVSPACE_RECONSTRUCT_HPP
#define DERIVSPACE_RECONSTRUCT_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "derivspace/derivatives.hpp"
#include "derivspace/exactla.hpp"
#include "derivspace/polyring.hpp"

namespace derivspace {

enum class Verdict { Unique, Ambiguous, Empty };

std::string_view verdict_name(Verdict v) noexcept;

/// Solution space {g in S_{n,d} : E_k(g) is contained in V}.
struct ReconstructionResult {
    int n = 0;
    int d = 0;
    int k = 0;
    std::size_t solution_dim = 0;
    /// RREF basis of the solution space, as polynomials.
    std::vector<HomPoly> basis;
    Verdict verdict = Verdict::Empty;
};

/// Recovers every g with E_k(g) inside V by solving the linear system
/// "phi(D_I g) = 0 for every |I| = k and every phi annihilating V".
/// Throws AmbientMismatch if V does not live in S_{n,d-k} and
/// OrderOutOfRange unless 0 <= k <= d.
ReconstructionResult solve_from_span(const Subspace& span, int n, int d, int k);

/// Coefficients a(I, I') with D_I g = sum_{|I'|=k} a(I, I') D_{I'} f.
class RelationMatrix {
public:
    RelationMatrix(int n, int k);
    RelationMatrix(int n, int k, ExactMatrix coefficients);

    int vars() const noexcept { return n_; }
    int order() const noexcept { return k_; }
    const std::vector<MultiIndex>& indices() const noexcept { return index_; }
    const ExactMatrix& coefficients() const noexcept { return a_; }

    /// a(I, I'); zero when either index is not an order-k index of length n+1.
    Rational at(const MultiIndex& row, const MultiIndex& col) const;
    void set(const MultiIndex& row, const MultiIndex& col, const Rational& value);

    /// c times the identity.
    static RelationMatrix scalar(int n, int k, const Rational& c);

    bool operator==(const RelationMatrix& other) const = default;

private:
    int n_;
    int k_;
    std::vector<MultiIndex> index_;
    ExactMatrix a_;
};

/// Throws NotContained when some D_I g lies outside E_k(f), and
/// DegenerateBasis when the D_{I'} f are linearly dependent (the
/// coefficients would not be unique).
RelationMatrix extract_relations(const HomPoly& f, const HomPoly& g, int k);

struct SymmetryViolation {
    MultiIndex row;
    MultiIndex col;
    int p = 0;
    int q = 0;
};

struct SymmetryReport {
    bool ok = true;
    std::vector<SymmetryViolation> violations;
};

/// Checks a(I, I') == a(I - e_p + e_q, I' - e_p + e_q) for all order-k I, I'
/// with I >= e_p and all q, where the right side is read as zero when
/// I' + e_q is not >= e_p.
SymmetryReport check_symmetry(const RelationMatrix& a);

/// For each |K| = k-1, the polynomial sum_{|K'|=k-1} a(K+e_0, K'+e_0) D_{K'} f.
/// When a comes from extract_relations(f, g, k) this equals D_K g.
/// Throws SymmetryViolated if check_symmetry(a) fails and OrderOutOfRange
/// for k < 1.
std::map<MultiIndex, HomPoly> descend(const HomPoly& f, const RelationMatrix& a, int k);

struct TheoremReport {
    int n = 0;
    int d = 0;
    int k = 0;
    /// 1 <= k <= d/2 - 1.
    bool within_bound = false;
    /// dim E_{k+1}(f) == dim S_{n,k+1}.
    bool hypothesis = false;
    /// dim E_r(f) for r = 0..k+1, and whether each is full.
    std::vector<std::size_t> chain_dims;
    std::vector<bool> chain_full;
    /// Full rank at k+1 forced full rank at every r below it.
    bool chain_ok = true;
    ReconstructionResult result;
    /// c with basis[0] == c * f when the verdict is UNIQUE and proportional.
    std::optional<Rational> witness;
    /// Hypothesis certified but f was not recovered up to scalar.
    bool contradiction = false;
};

TheoremReport verify_theorem(const HomPoly& f, int k);

} // namespace derivspace

#endif // DERIVSPACE_RECONSTRUCT_HPP
