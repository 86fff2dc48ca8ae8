#pragma once

#include <vector>

#include "sturm/lap_signature.hpp"

namespace sturm {

/// Search bound for signature enumeration: either n + q <= value or
/// N = n + 2q <= value.
struct EnumerationBound {
    enum class Kind { MaxNQ, MaxN } kind;
    int value;

    static EnumerationBound max_nq(int k) { return {Kind::MaxNQ, k}; }
    static EnumerationBound max_n(int m) { return {Kind::MaxN, m}; }
};

/// All valid full lap signatures within the bound, one representative per
/// trivial-equivalence class (canonical form), in deterministic order:
/// ascending n, then ascending q, then all-central shapes before annular
/// ones, then list sizes and contents in inverse-lexicographic order.
/// This reproduces the published table ordering for n + q <= 7.
std::vector<Signature> enumerate_signatures(const EnumerationBound& bound);

} // namespace sturm
