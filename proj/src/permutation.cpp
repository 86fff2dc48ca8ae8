#include "sturm/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

} // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw ValidationError("permutation must have at least one entry");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : entries_) {
        if (v < 1 || v > n)
            throw ValidationError("permutation entry " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
        if (seen[static_cast<std::size_t>(v) - 1])
            throw ValidationError("duplicate permutation entry " + std::to_string(v));
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> entries;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digit in permutation", i);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw ParseError("permutation entry too large", i);
            ++i;
        }
        entries.push_back(static_cast<int>(v));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("expected ',' between permutation entries", i);
            ++i;
            skip_ws();
            if (i == text.size()) throw ParseError("trailing ',' in permutation", i - 1);
        }
    }
    if (entries.empty()) throw ParseError("empty permutation", 0);
    return Permutation(std::move(entries));
}

std::string Permutation::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    return out.str();
}

Permutation inverse(const Permutation& p) {
    std::vector<int> inv(static_cast<std::size_t>(p.size()));
    for (int pos = 1; pos <= p.size(); ++pos) inv[static_cast<std::size_t>(p.of(pos)) - 1] = pos;
    return Permutation(std::move(inv));
}

std::vector<int> morse_indices(const Permutation& p) {
    const int n = p.size();
    const Permutation inv = inverse(p);
    std::vector<int> morse(static_cast<std::size_t>(n));
    morse[0] = 0;
    for (int j = 2; j <= n; ++j) {
        const int k = j - 1;
        const int step = ((k % 2 == 1) ? 1 : -1) * sign_of(inv.of(k + 1) - inv.of(k));
        morse[static_cast<std::size_t>(j) - 1] = morse[static_cast<std::size_t>(j) - 2] + step;
    }
    return morse;
}

ZeroMatrix zero_numbers(const Permutation& p) {
    const int n = p.size();
    const Permutation inv = inverse(p);
    const std::vector<int> morse = morse_indices(p);
    auto sgn = [&](int k, int j) { return sign_of(inv.of(k) - inv.of(j)); };

    std::vector<int> z(static_cast<std::size_t>(n) * n, 0);
    for (int j = 1; j <= n; ++j) {
        for (int jp = j + 1; jp <= n; ++jp) {
            const int halved = ((jp % 2 == 0) ? 1 : -1) * sgn(jp, j) - 1;
            if (halved % 2 != 0)
                throw InternalInvariantError("zero-number half term is not an even integer");
            int value = morse[static_cast<std::size_t>(j) - 1] + halved / 2;
            for (int k = j + 1; k < jp; ++k) value += ((k % 2 == 0) ? 1 : -1) * sgn(k, j);
            z[static_cast<std::size_t>(j - 1) * n + (jp - 1)] = value;
            z[static_cast<std::size_t>(jp - 1) * n + (j - 1)] = value;
        }
    }
    return ZeroMatrix(n, std::move(z));
}

Permutation reverse_trivial(const Permutation& p) {
    const int n = p.size();
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) r[static_cast<std::size_t>(j) - 1] = n + 1 - p.of(n + 1 - j);
    return Permutation(std::move(r));
}

std::vector<std::vector<int>> cycle_structure(const Permutation& p) {
    const int n = p.size();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur) - 1] = 1;
            cycle.push_back(cur);
            cur = p.of(cur);
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

} // namespace sturm
