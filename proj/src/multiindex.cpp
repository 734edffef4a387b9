#include "derivspace/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "derivspace/error.hpp"

namespace derivspace {

namespace {

void require_same_length(const MultiIndex& lhs, const MultiIndex& rhs)
{
    if (lhs.size() != rhs.size()) {
        throw DomainError(ErrorKind::LengthMismatch,
                          lhs.to_string() + " vs " + rhs.to_string());
    }
}

void enumerate_into(std::vector<int>& prefix, int remaining_vars, int degree,
                    std::vector<MultiIndex>& out)
{
    if (remaining_vars == 0) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_into(prefix, remaining_vars - 1, degree - e, out);
        prefix.pop_back();
    }
}

} // namespace

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps))
{
    for (int e : exps_) {
        if (e < 0) {
            throw DomainError(ErrorKind::NotDominated, "negative exponent in multi-index");
        }
    }
    order_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(n + 1, 0)); }

MultiIndex MultiIndex::unit(int n, int j)
{
    std::vector<int> exps(n + 1, 0);
    exps.at(j) = 1;
    return MultiIndex(std::move(exps));
}

bool MultiIndex::operator<(const MultiIndex& other) const noexcept
{
    if (exps_.size() != other.exps_.size()) return exps_.size() < other.exps_.size();
    if (order_ != other.order_) return order_ > other.order_;
    // lexicographically larger comes first
    return std::lexicographical_compare(other.exps_.begin(), other.exps_.end(),
                                        exps_.begin(), exps_.end());
}

std::string MultiIndex::to_string() const
{
    std::string s = "(";
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(exps_[j]);
    }
    s += ')';
    return s;
}

int order(const MultiIndex& index) { return index.order(); }

bool geq(const MultiIndex& lhs, const MultiIndex& rhs)
{
    require_same_length(lhs, rhs);
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        if (lhs[j] < rhs[j]) return false;
    }
    return true;
}

MultiIndex add(const MultiIndex& lhs, const MultiIndex& rhs)
{
    require_same_length(lhs, rhs);
    std::vector<int> out(lhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) out[j] = lhs[j] + rhs[j];
    return MultiIndex(std::move(out));
}

MultiIndex sub(const MultiIndex& lhs, const MultiIndex& rhs)
{
    if (!geq(lhs, rhs)) {
        throw DomainError(ErrorKind::NotDominated, lhs.to_string() + " - " + rhs.to_string());
    }
    std::vector<int> out(lhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) out[j] = lhs[j] - rhs[j];
    return MultiIndex(std::move(out));
}

std::uint64_t binomial(int a, int b)
{
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::size_t graded_dim(int n, int e)
{
    if (n < 0 || e < 0) return 0;
    return static_cast<std::size_t>(binomial(n + e, e));
}

std::vector<MultiIndex> enumerate(int n, int e)
{
    std::vector<MultiIndex> out;
    if (n < 0 || e < 0) return out;
    out.reserve(graded_dim(n, e));
    std::vector<int> prefix;
    prefix.reserve(n + 1);
    enumerate_into(prefix, n, e, out);
    return out;
}

std::size_t rank_in_degree(const MultiIndex& index)
{
    // Count the indices of the same order that precede `index`: at position j
    // with r units left, every larger entry t in (i_j, r] contributes the
    // number of ways to spread r - t over the remaining n - j slots.
    const int n = index.vars();
    int remaining = index.order();
    std::size_t rank = 0;
    for (int j = 0; j < n; ++j) {
        const int tail_vars = n - j - 1;
        for (int t = index[j] + 1; t <= remaining; ++t) {
            rank += static_cast<std::size_t>(binomial(remaining - t + tail_vars, tail_vars));
        }
        remaining -= index[j];
    }
    return rank;
}

MultiIndex parse_multiindex(std::string_view text)
{
    std::string_view body = text;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    body = trim(body);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') {
            throw DomainError(ErrorKind::SyntaxError, "unbalanced parenthesis in multi-index");
        }
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> exps;
    while (true) {
        const auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
            throw DomainError(ErrorKind::SyntaxError,
                              "bad multi-index entry '" + std::string(item) + "'");
        }
        exps.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return MultiIndex(std::move(exps));
}

std::size_t MultiIndexHash::operator()(const MultiIndex& index) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : index.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace derivspace
