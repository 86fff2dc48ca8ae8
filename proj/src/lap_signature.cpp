#include "sturm/lap_signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

// ---------------------------------------------------------------------------
// Parsing

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        if (pos == text.size()) throw ParseError("unexpected end of signature", pos);
        return text[pos];
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos == text.size() || text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    LapList parse_list() {
        expect('{', "'{'");
        LapList list;
        skip_ws();
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            return list;
        }
        while (true) {
            skip_ws();
            if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected lap number", pos);
            long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > 1000) throw ParseError("lap number too large", pos);
                ++pos;
            }
            if (v < 1) throw ParseError("lap numbers are positive", pos - 1);
            list.push_back(static_cast<int>(v));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect('}', "',' or '}'");
            return list;
        }
    }

    SignaturePair parse_pair() {
        expect('(', "'('");
        SignaturePair pair;
        if (peek() == '{') pair.lower = parse_list();
        char c = peek();
        if (c == '@') {
            ++pos;
            pair.annular = false;
        } else if (c == '(') {
            pair.annular = true;
            pair.inner.push_back(parse_pair());
            while (true) {
                char d = peek();
                if (d == '*') {
                    ++pos;
                    pair.inner.push_back(parse_pair());
                } else if (d == '(') {
                    throw ValidationError("axiom (iii): adjacent pairs must be separated by a "
                                          "saddle (byte " +
                                          std::to_string(pos) + ")");
                } else {
                    break;
                }
            }
        } else {
            throw ValidationError("axiom (iv): pair without center marker or inner pairs (byte " +
                                  std::to_string(pos) + ")");
        }
        if (peek() == '{') pair.upper = parse_list();
        expect(')', "')'");
        return pair;
    }

    Signature parse_top() {
        expect('*', "leading saddle '*'");
        Signature sig;
        while (!at_end()) {
            sig.pairs.push_back(parse_pair());
            expect('*', "saddle '*' after pair");
        }
        return sig;
    }
};

void serialize_list(std::ostringstream& out, const LapList& list) {
    if (list.empty()) return;
    out << '{';
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << ',';
        out << list[i];
    }
    out << '}';
}

void serialize_pair(std::ostringstream& out, const SignaturePair& pair) {
    out << '(';
    serialize_list(out, pair.lower);
    if (pair.annular) {
        for (std::size_t i = 0; i < pair.inner.size(); ++i) {
            if (i) out << '*';
            serialize_pair(out, pair.inner[i]);
        }
    } else {
        out << '@';
    }
    serialize_list(out, pair.upper);
    out << ')';
}

// ---------------------------------------------------------------------------
// Validation

struct Validator {
    std::vector<AxiomViolation> violations;

    void check_list(const LapList& list, bool annular, const std::string& where) {
        const int s = static_cast<int>(list.size());
        if (s == 0) return;
        if (list[0] != 1)
            violations.push_back({"vii", where + ": list must start with lap 1"});
        if (annular) {
            if (list[static_cast<std::size_t>(s) - 1] != 1)
                violations.push_back({"vii", where + ": annular list must end with lap 1"});
            if (s % 2 != 0)
                violations.push_back({"vii", where + ": annular list length must be even"});
        }
        for (int j = 0; j + 1 < s; ++j) {
            if (std::abs(list[static_cast<std::size_t>(j) + 1] - list[static_cast<std::size_t>(j)]) > 1) {
                violations.push_back(
                    {"viii", where + ": neighbor jump at entries " + std::to_string(j + 1) + "," +
                                 std::to_string(j + 2)});
            }
        }
        // Alternate jump condition over maximal constant runs, list start
        // padded with a virtual 0, final run exempt.
        int j0 = 0;
        while (j0 < s) {
            int j1 = j0;
            while (j1 + 1 < s && list[static_cast<std::size_t>(j1) + 1] == list[static_cast<std::size_t>(j0)]) ++j1;
            if (j1 + 1 < s) {
                const int before = (j0 == 0) ? 0 : list[static_cast<std::size_t>(j0) - 1];
                const int entry = list[static_cast<std::size_t>(j0)] - before;
                const int exit = list[static_cast<std::size_t>(j1) + 1] - list[static_cast<std::size_t>(j1)];
                const int want = ((j1 - j0) % 2 == 0) ? 1 : -1;
                if (entry * exit != want)
                    violations.push_back({"ix", where + ": alternate jump at run " +
                                                    std::to_string(j0 + 1) + ".." +
                                                    std::to_string(j1 + 1)});
            }
            j0 = j1 + 1;
        }
    }

    void check_pair(const SignaturePair& pair, const std::string& where) {
        LapList reversed(pair.lower.rbegin(), pair.lower.rend());
        if (pair.upper != reversed)
            violations.push_back({"vi", where + ": upper list is not the lower list reversed"});
        if (pair.annular) {
            if (pair.lower.empty() || pair.upper.empty())
                violations.push_back({"v", where + ": annular pair needs nonempty lists"});
            if (pair.inner.empty())
                violations.push_back({"v", where + ": annular pair needs inner pairs"});
            else if (pair.inner.size() == 1)
                violations.push_back({"ii", where + ": redundant nesting (single inner pair)"});
            for (std::size_t i = 0; i < pair.inner.size(); ++i)
                check_pair(pair.inner[i], where + "." + std::to_string(i + 1));
        }
        check_list(pair.lower, pair.annular, where);
    }
};

void count_pair(const SignaturePair& pair, SignatureCounts& c) {
    c.q += static_cast<int>(pair.lower.size());
    if (pair.annular) {
        c.n += static_cast<int>(pair.inner.size()) - 1; // separating saddles
        for (const auto& p : pair.inner) count_pair(p, c);
    } else {
        c.n += 1; // the center
        c.centers += 1;
    }
}

// ---------------------------------------------------------------------------
// Labels

struct LabelBuilder {
    std::vector<EquilibriumLabel> out;

    void push_saddle() {
        EquilibriumLabel l;
        l.position = static_cast<int>(out.size()) + 1;
        l.kind = SymbolKind::Saddle;
        out.push_back(l);
    }

    void push_frozen(int lap, ExtremumRole role, CrossingSign sign) {
        EquilibriumLabel l;
        l.position = static_cast<int>(out.size()) + 1;
        l.kind = SymbolKind::FrozenEntry;
        l.lap = lap;
        l.role = role;
        l.tprime_sign = sign;
        l.morse_neumann = lap + (sign == CrossingSign::Pos ? 1 : 0);
        l.morse_periodic = 2 * lap - 1 + (sign == CrossingSign::Pos ? 1 : 0);
        out.push_back(l);
    }

    void push_center(int morse_neumann) {
        EquilibriumLabel l;
        l.position = static_cast<int>(out.size()) + 1;
        l.kind = SymbolKind::Center;
        l.morse_neumann = morse_neumann;
        l.morse_periodic = 2 * morse_neumann - 1;
        out.push_back(l);
    }

    void emit_pair(const SignaturePair& pair) {
        const auto signs = tprime_signs(pair.lower, pair.annular);
        const std::size_t s = pair.lower.size();
        for (std::size_t t = 0; t < s; ++t)
            push_frozen(pair.lower[t], ExtremumRole::Min, signs[t]);
        if (pair.annular) {
            for (std::size_t i = 0; i < pair.inner.size(); ++i) {
                if (i) push_saddle();
                emit_pair(pair.inner[i]);
            }
        } else {
            int center_morse = 1;
            if (!pair.lower.empty()) {
                const int last_lap = pair.lower.back();
                center_morse =
                    (signs.back() == CrossingSign::Neg) ? last_lap + 1 : last_lap;
            }
            push_center(center_morse);
        }
        for (std::size_t t = s; t-- > 0;)
            push_frozen(pair.lower[t], ExtremumRole::Max, signs[t]);
    }
};

} // namespace

Signature parse_signature_unvalidated(std::string_view text) {
    Parser p{text};
    return p.parse_top();
}

Signature parse_signature(std::string_view text) {
    Signature sig = parse_signature_unvalidated(text);
    auto violations = validate(sig);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid signature:";
        for (const auto& v : violations) msg << " (" << v.axiom << ") " << v.detail << ";";
        throw ValidationError(msg.str());
    }
    return sig;
}

std::string serialize(const Signature& sig) {
    std::ostringstream out;
    out << '*';
    for (const auto& pair : sig.pairs) {
        serialize_pair(out, pair);
        out << '*';
    }
    return out.str();
}

std::vector<AxiomViolation> validate(const Signature& sig) {
    Validator v;
    for (std::size_t i = 0; i < sig.pairs.size(); ++i)
        v.check_pair(sig.pairs[i], "pair " + std::to_string(i + 1));
    return v.violations;
}

SignatureCounts counts(const Signature& sig) {
    SignatureCounts c;
    c.n = 1 + static_cast<int>(sig.pairs.size()); // saddles at the top level
    for (const auto& pair : sig.pairs) count_pair(pair, c);
    c.big_n = c.n + 2 * c.q;
    return c;
}

std::vector<CrossingSign> tprime_signs(const LapList& list, bool annular) {
    std::vector<CrossingSign> signs;
    if (list.empty()) return signs;
    if (list[0] != 1) throw InternalInvariantError("lap list does not start at 1");
    signs.push_back(CrossingSign::Neg);
    for (std::size_t j = 1; j < list.size(); ++j) {
        const int delta = list[j] - list[j - 1];
        const CrossingSign prev = signs.back();
        if (delta == 0) {
            signs.push_back(prev == CrossingSign::Neg ? CrossingSign::Pos : CrossingSign::Neg);
        } else if (delta == 1) {
            if (prev != CrossingSign::Neg)
                throw InternalInvariantError("lap increase after an ascending period-map crossing");
            signs.push_back(CrossingSign::Neg);
        } else if (delta == -1) {
            if (prev != CrossingSign::Pos)
                throw InternalInvariantError("lap decrease after a descending period-map crossing");
            signs.push_back(CrossingSign::Pos);
        } else {
            throw InternalInvariantError("lap list with neighbor jump > 1");
        }
    }
    if (annular && signs.back() != CrossingSign::Pos)
        throw InternalInvariantError("annular lap list ends on a descending crossing");
    return signs;
}

std::vector<EquilibriumLabel> labels(const Signature& sig) {
    if (auto v = validate(sig); !v.empty())
        throw ValidationError("labels() requires a valid signature, first violation: (" +
                              v.front().axiom + ") " + v.front().detail);
    LabelBuilder b;
    b.push_saddle();
    for (const auto& pair : sig.pairs) {
        b.emit_pair(pair);
        b.push_saddle();
    }
    return std::move(b.out);
}

namespace {

SignaturePair reverse_pair(const SignaturePair& pair) {
    SignaturePair r;
    r.annular = pair.annular;
    r.lower.assign(pair.upper.rbegin(), pair.upper.rend());
    r.upper.assign(pair.lower.rbegin(), pair.lower.rend());
    for (auto it = pair.inner.rbegin(); it != pair.inner.rend(); ++it)
        r.inner.push_back(reverse_pair(*it));
    return r;
}

} // namespace

Signature reverse_signature(const Signature& sig) {
    Signature r;
    for (auto it = sig.pairs.rbegin(); it != sig.pairs.rend(); ++it)
        r.pairs.push_back(reverse_pair(*it));
    return r;
}

Signature canonicalize(const Signature& sig) {
    Signature rev = reverse_signature(sig);
    return serialize(sig) >= serialize(rev) ? sig : rev;
}

} // namespace sturm
