#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sturm {

/// Ordered lap numbers of one min/max domain, lower side. Possibly empty.
using LapList = std::vector<int>;

/// One parenthesis pair of a full lap signature.
///
/// Central pairs hold mirrored lists around a center mark and have no
/// inner pairs. Annular pairs hold mirrored nonempty lists around an
/// inner sequence of at least two pairs (saddles separate them).
struct SignaturePair {
    bool annular = false;
    LapList lower;
    LapList upper; // always lower reversed in a valid signature
    std::vector<SignaturePair> inner;

    bool operator==(const SignaturePair&) const = default;
};

/// Full lap signature: leading saddle, then pairs separated by saddles,
/// then trailing saddle. An empty pair list is the one-saddle signature.
struct Signature {
    std::vector<SignaturePair> pairs;

    bool operator==(const Signature&) const = default;
};

/// One stripped-sequence position violating or describing the signature.
enum class SymbolKind { Saddle, Center, FrozenEntry };
enum class ExtremumRole { Min, Max };
enum class CrossingSign { Neg, Pos };

/// Per-position metadata of the stripped symbol sequence.
struct EquilibriumLabel {
    int position = 0; // 1..N left to right
    SymbolKind kind = SymbolKind::Saddle;
    int lap = 0;                                 // FrozenEntry only
    ExtremumRole role = ExtremumRole::Min;       // FrozenEntry only
    CrossingSign tprime_sign = CrossingSign::Neg; // FrozenEntry only
    int morse_neumann = 0;
    int morse_periodic = 0;
};

/// Violation of one of the defining axioms (i)-(ix).
struct AxiomViolation {
    std::string axiom;   // roman numeral, "i".."ix"
    std::string detail;  // human-readable location
};

struct SignatureCounts {
    int n = 0;       // saddles + centers
    int q = 0;       // total lower-list entries
    int big_n = 0;   // n + 2q, stripped sequence length
    int centers = 0; // (n-1)/2
};

/// Parses the ASCII form: '*' saddle, '@' center, '(' ')' pairs,
/// '{1,2}' lap lists, whitespace ignored. Structural axioms are
/// enforced during the parse; numeric list axioms are left to
/// `validate`, which parse() then applies too. Throws ParseError with a
/// byte position, or ValidationError listing violated axioms.
Signature parse_signature(std::string_view text);

/// Structural parse only; numeric axioms (vii)-(ix) are NOT checked.
Signature parse_signature_unvalidated(std::string_view text);

/// Canonical ASCII form, no whitespace, empty lists omitted.
std::string serialize(const Signature& sig);

/// Every violated axiom, with location. Empty result means valid.
std::vector<AxiomViolation> validate(const Signature& sig);

SignatureCounts counts(const Signature& sig);

/// Crossing signs of the period map along one lower list: the first
/// crossing descends; equal laps alternate; a lap increase requires and
/// keeps Neg, a decrease requires and keeps Pos. Annular lists must end
/// Pos. Throws InternalInvariantError when the walk contradicts itself,
/// which a validated list cannot do.
std::vector<CrossingSign> tprime_signs(const LapList& list, bool annular);

/// Stripped left-to-right sequence with Morse data filled in.
std::vector<EquilibriumLabel> labels(const Signature& sig);

/// Mirror image: pair order reversed at every level, lists swapped with
/// their partners. Involutive; preserves validity and counts.
Signature reverse_signature(const Signature& sig);

/// Dedup representative under trivial equivalence: the byte-wise greater
/// of serialize(sig) and serialize(reverse_signature(sig)). This makes
/// forms with nonempty lists on the left canonical.
Signature canonicalize(const Signature& sig);

} // namespace sturm
