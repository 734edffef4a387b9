#ifndef DERIVSPACE_MULTIINDEX_HPP
#define DERIVSPACE_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace derivspace {

/// Exponent tuple (i_0, ..., i_n). Immutable value; equality is entrywise.
///
/// Sorting a container of MultiIndex with `operator<` yields the canonical
/// monomial order: graded, then lexicographic descending, so that within one
/// degree (2,0) < (1,1) < (0,2) in the sense of "comes first".
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> exps);
    explicit MultiIndex(std::vector<int> exps);

    /// All-zero index of length n+1.
    static MultiIndex zero(int n);
    /// Canonical basis vector e_j of length n+1.
    static MultiIndex unit(int n, int j);

    std::size_t size() const noexcept { return exps_.size(); }
    /// n, i.e. size() - 1.
    int vars() const noexcept { return static_cast<int>(exps_.size()) - 1; }
    int operator[](std::size_t j) const { return exps_[j]; }
    std::span<const int> exponents() const noexcept { return exps_; }

    int order() const noexcept { return order_; }

    bool operator==(const MultiIndex& other) const = default;
    /// Canonical order: "a < b" means a precedes b.
    bool operator<(const MultiIndex& other) const noexcept;

    std::string to_string() const;

private:
    std::vector<int> exps_;
    int order_ = 0;
};

int order(const MultiIndex& index);
bool geq(const MultiIndex& lhs, const MultiIndex& rhs);
MultiIndex add(const MultiIndex& lhs, const MultiIndex& rhs);
MultiIndex sub(const MultiIndex& lhs, const MultiIndex& rhs);

inline MultiIndex operator+(const MultiIndex& lhs, const MultiIndex& rhs) { return add(lhs, rhs); }
inline MultiIndex operator-(const MultiIndex& lhs, const MultiIndex& rhs) { return sub(lhs, rhs); }

/// binomial(a, b) as an unsigned 64-bit count; 0 when b < 0 or b > a.
std::uint64_t binomial(int a, int b);

/// dim S_{n,e} = binomial(n+e, e).
std::size_t graded_dim(int n, int e);

/// Every multi-index of length n+1 and order e, in canonical order.
std::vector<MultiIndex> enumerate(int n, int e);

/// Position of `index` inside enumerate(index.vars(), index.order()).
std::size_t rank_in_degree(const MultiIndex& index);

/// Parses "(i0,i1,...)" or "i0,i1,...". Throws DomainError(SyntaxError).
MultiIndex parse_multiindex(std::string_view text);

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& index) const noexcept;
};

} // namespace derivspace

#endif // DERIVSPACE_MULTIINDEX_HPP
