#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sturm {

/// Permutation of {1,...,N} in one-line notation, 1-based throughout.
///
/// `of(p)` is the image sigma(p) of position p. Construction validates
/// bijectivity, so a Permutation instance is always well formed.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    /// Parses comma-separated one-line notation, e.g. "1,8,7,4,5,6,3,2,9".
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int of(int position) const { return entries_[static_cast<std::size_t>(position) - 1]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    std::string serialize() const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> entries_;
};

/// Inverse permutation: result.of(v) = position of value v.
Permutation inverse(const Permutation& p);

/// Formal Morse numbers i_j for any permutation: i_1 = 0 and
/// i_j = sum_{k<j} (-1)^{k+1} sign(inv(k+1) - inv(k)).
/// Consecutive entries always differ by exactly 1.
std::vector<int> morse_indices(const Permutation& p);

/// Symmetric matrix of formal zero numbers z_{jj'}; the diagonal is
/// meaningless and left at 0. Exact integer arithmetic; the halved term
/// is checked to be even before dividing.
class ZeroMatrix {
public:
    ZeroMatrix(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {}
    int size() const noexcept { return n_; }
    int at(int j, int k) const { return values_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)]; }

private:
    int n_;
    std::vector<int> values_;
};

ZeroMatrix zero_numbers(const Permutation& p);

/// The involution u -> -u on attractors: result(j) = N+1 - p(N+1-j).
Permutation reverse_trivial(const Permutation& p);

/// Disjoint cycle decomposition covering {1,...,N}; fixed points appear
/// as 1-cycles. Each cycle starts at its smallest element; cycles are
/// ordered by that element.
std::vector<std::vector<int>> cycle_structure(const Permutation& p);

} // namespace sturm
