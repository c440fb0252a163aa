#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "cremona/families.hpp"
#include "cremona/leading.hpp"

namespace cremona {

enum class Letter : std::uint8_t { A, AInv, B, BInv };

Letter inverse_letter(Letter l);
char letter_char(Letter l);  // 'A', 'a', 'B', 'b'

/// Freely reduced word over two generators and their inverses.  The empty
/// word is the identity.  Construction reduces eagerly, so adjacent
/// inverse pairs never survive.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    /// Accepts 'A', 'a', 'B', 'b' (lowercase = inverse); whitespace ignored.
    static GroupWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord inverse() const;
    bool operator==(const GroupWord&) const = default;

    std::string to_string() const;  // "1" for the identity

private:
    std::vector<Letter> letters_;
};

/// Word metric: length of u * v^{-1} after free reduction.
int word_distance(const GroupWord& u, const GroupWord& v);

/// Product of the letter images along the word, left to right; inverse
/// letters use the exact integer inverse of the image.
IntMatrix eval_word(const GroupWord& w, const IntMatrix& image_a, const IntMatrix& image_b);

/// Enumerates every freely reduced word of length <= radius in a fixed
/// deterministic order (by length, letters ordered A < a < B < b) and calls
/// the visitor with the word and its evaluation.  The visitor returns false
/// to stop early.
void for_each_reduced_word(const IntMatrix& image_a, const IntMatrix& image_b, int radius,
                           const std::function<bool(const GroupWord&, const IntMatrix&)>& visit);

/// True iff all reduced words of length <= radius evaluate to pairwise
/// distinct matrices: no relation of length <= 2*radius holds between the
/// two images.  Radius must be >= 1.  words_checked reports the number of
/// words enumerated (including the empty word).
bool no_relation_certificate(const IntMatrix& image_a, const IntMatrix& image_b, int radius,
                             std::uint64_t* words_checked = nullptr);

/// Sampled table-tennis check for T = [[1,m],[0,1]], S = [[1,0],[m,1]]:
/// on every sample v with |x| > |y|, S^k v (0 < |k| <= k_range) must have
/// |y'| > |x'|, and dually for T.  Violations (any |m| < 2 has them on a
/// grid containing (1,0)) make the check false.  m = 0 is rejected.
bool pingpong_check(long long m, std::span<const std::array<long long, 2>> samples,
                    int k_range = 2);

/// Conjugation action of a word on a map: W o f o W^{-1}, normalized, where
/// W is the monomial map of eval_word over the squares of the two standard
/// generators in f's dimension (n >= 4).
ProjectiveMap conjugate_by_word(const GroupWord& w, const ProjectiveMap& f);

/// Exponent matrix E of a diagonal tuple over formal symbols t1..tn:
/// lambda_i = prod_j t_j^{E_{ji}}.  The identity matrix is the generic
/// tuple (t1, ..., tn); the all-ones first row with zeros below encodes
/// (t, t, ..., t).
struct SymbolicDiagonal {
    IntMatrix exponents;

    explicit SymbolicDiagonal(IntMatrix e) : exponents(std::move(e)) {}
    static SymbolicDiagonal generic(int n) { return SymbolicDiagonal(IntMatrix::identity(n)); }
    static SymbolicDiagonal all_equal(int n);
};

/// lambda'_j = prod_i lambda_i^{K_{ij}} -- the effect of conjugating the
/// diagonal map by the monomial map of K.
std::vector<Rational> apply_exponent_matrix(const std::vector<Rational>& lambdas,
                                            const IntMatrix& k);

struct OrbitClassification {
    bool fixed;
    bool unconditional;                 // true only for the symbolic shortcut
    int radius;                         // enumeration radius used
    std::optional<GroupWord> witness;   // first moving word in enumeration order
};

/// Conjugation orbit of a diagonal map under words of length <= radius in
/// the squares of the two standard generators, via the exponent law.
OrbitClassification diag_orbit_classify(const SymbolicDiagonal& diag, int radius);
OrbitClassification diag_orbit_classify(const DiagonalSpec& diag, int radius);

}  // namespace cremona
