#include "cremona/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "cremona/errors.hpp"

namespace cremona {

Letter inverse_letter(Letter l) {
    switch (l) {
        case Letter::A: return Letter::AInv;
        case Letter::AInv: return Letter::A;
        case Letter::B: return Letter::BInv;
        case Letter::BInv: return Letter::B;
    }
    throw error("inverse_letter: bad letter");
}

char letter_char(Letter l) {
    switch (l) {
        case Letter::A: return 'A';
        case Letter::AInv: return 'a';
        case Letter::B: return 'B';
        case Letter::BInv: return 'b';
    }
    throw error("letter_char: bad letter");
}

GroupWord::GroupWord(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if (!letters_.empty() && letters_.back() == inverse_letter(l))
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

GroupWord GroupWord::parse(std::string_view text) {
    std::vector<Letter> out;
    for (char c : text) {
        switch (c) {
            case 'A': out.push_back(Letter::A); break;
            case 'a': out.push_back(Letter::AInv); break;
            case 'B': out.push_back(Letter::B); break;
            case 'b': out.push_back(Letter::BInv); break;
            case ' ': case '\t': break;
            case '1': break;  // allow "1" for the identity
            default:
                throw precondition_error(std::string("GroupWord::parse: bad letter '") + c +
                                         "' (use A, a, B, b)");
        }
    }
    return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(std::move(cat));
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(inverse_letter(*it));
    return GroupWord(std::move(rev));
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(letter_char(l));
    return out;
}

int word_distance(const GroupWord& u, const GroupWord& v) {
    return (u * v.inverse()).length();
}

IntMatrix eval_word(const GroupWord& w, const IntMatrix& image_a, const IntMatrix& image_b) {
    if (image_a.size() != image_b.size())
        throw precondition_error("eval_word: image sizes differ");
    const IntMatrix inv_a = image_a.inverse_unimodular();
    const IntMatrix inv_b = image_b.inverse_unimodular();
    IntMatrix acc = IntMatrix::identity(image_a.size());
    for (Letter l : w.letters()) {
        switch (l) {
            case Letter::A: acc = acc * image_a; break;
            case Letter::AInv: acc = acc * inv_a; break;
            case Letter::B: acc = acc * image_b; break;
            case Letter::BInv: acc = acc * inv_b; break;
        }
    }
    return acc;
}

void for_each_reduced_word(const IntMatrix& image_a, const IntMatrix& image_b, int radius,
                           const std::function<bool(const GroupWord&, const IntMatrix&)>& visit) {
    if (image_a.size() != image_b.size())
        throw precondition_error("for_each_reduced_word: image sizes differ");
    const std::array<IntMatrix, 4> step = {image_a, image_a.inverse_unimodular(), image_b,
                                           image_b.inverse_unimodular()};
    const std::array<Letter, 4> letters = {Letter::A, Letter::AInv, Letter::B, Letter::BInv};

    std::vector<Letter> stack;
    if (!visit(GroupWord(), IntMatrix::identity(image_a.size()))) return;

    // Depth-first over the tree of reduced words, shorter prefixes first at
    // each branch; the visit order is by prefix, deterministic.
    struct Frame {
        IntMatrix value;
        int next = 0;
    };
    std::vector<Frame> frames;
    frames.push_back({IntMatrix::identity(image_a.size()), 0});
    while (!frames.empty()) {
        Frame& top = frames.back();
        if (top.next >= 4 || static_cast<int>(frames.size()) - 1 >= radius) {
            frames.pop_back();
            if (!stack.empty()) stack.pop_back();
            continue;
        }
        const int k = top.next++;
        if (!stack.empty() && letters[k] == inverse_letter(stack.back())) continue;
        IntMatrix value = top.value * step[k];
        stack.push_back(letters[k]);
        if (!visit(GroupWord(stack), value)) return;
        frames.push_back({std::move(value), 0});
    }
}

namespace {

// Words in breadth-first order (length, then A < a < B < b) paired with
// their evaluations; used where the deterministic *first* witness matters.
template <typename Pred>
std::optional<GroupWord> first_word_where(const IntMatrix& image_a, const IntMatrix& image_b,
                                          int radius, Pred pred) {
    const std::array<IntMatrix, 4> step = {image_a, image_a.inverse_unimodular(), image_b,
                                           image_b.inverse_unimodular()};
    const std::array<Letter, 4> letters = {Letter::A, Letter::AInv, Letter::B, Letter::BInv};

    struct Node {
        GroupWord word;
        IntMatrix value;
    };
    std::vector<Node> level;
    level.push_back({GroupWord(), IntMatrix::identity(image_a.size())});
    if (pred(level[0].word, level[0].value)) return level[0].word;
    for (int len = 1; len <= radius; ++len) {
        std::vector<Node> next;
        next.reserve(level.size() * 3);
        for (const Node& node : level) {
            for (int k = 0; k < 4; ++k) {
                if (!node.word.is_identity() &&
                    letters[k] == inverse_letter(node.word.letters().back()))
                    continue;
                std::vector<Letter> ls = node.word.letters();
                ls.push_back(letters[k]);
                Node child{GroupWord(std::move(ls)), node.value * step[k]};
                if (pred(child.word, child.value)) return child.word;
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

bool no_relation_certificate(const IntMatrix& image_a, const IntMatrix& image_b, int radius,
                             std::uint64_t* words_checked) {
    if (radius < 1) throw precondition_error("no_relation_certificate: radius must be >= 1");
    const int n = image_a.size();

    std::vector<std::vector<long long>> seen;
    std::uint64_t count = 0;
    for_each_reduced_word(image_a, image_b, radius,
                          [&](const GroupWord&, const IntMatrix& value) {
                              std::vector<long long> flat;
                              flat.reserve(static_cast<std::size_t>(n) * n);
                              for (int i = 0; i < n; ++i)
                                  for (int j = 0; j < n; ++j) flat.push_back(value.at(i, j));
                              seen.push_back(std::move(flat));
                              ++count;
                              return true;
                          });
    if (words_checked) *words_checked = count;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool pingpong_check(long long m, std::span<const std::array<long long, 2>> samples, int k_range) {
    if (m == 0) throw precondition_error("pingpong_check: m must be nonzero");
    if (k_range < 1) throw precondition_error("pingpong_check: k_range must be >= 1");
    for (const auto& v : samples) {
        const long long x = v[0];
        const long long y = v[1];
        if (x == 0 && y == 0)
            throw precondition_error("pingpong_check: zero sample vector");
        for (int k = -k_range; k <= k_range; ++k) {
            if (k == 0) continue;
            if (std::llabs(x) > std::llabs(y)) {
                // S^k (x, y) = (x, k m x + y) must land in |y'| > |x'|.
                const long long y2 = k * m * x + y;
                if (!(std::llabs(y2) > std::llabs(x))) return false;
            } else if (std::llabs(y) > std::llabs(x)) {
                // T^k (x, y) = (x + k m y, y) must land in |x'| > |y'|.
                const long long x2 = x + k * m * y;
                if (!(std::llabs(x2) > std::llabs(y))) return false;
            }
        }
    }
    return true;
}

ProjectiveMap conjugate_by_word(const GroupWord& w, const ProjectiveMap& f) {
    const int n = f.ambient_n();
    auto [m1, m2] = a1_a2_matrices(n);
    const IntMatrix image_a = m1 * m1;
    const IntMatrix image_b = m2 * m2;
    const IntMatrix e = eval_word(w, image_a, image_b);
    const ProjectiveMap conjugator = monomial_map(e);
    const ProjectiveMap conjugator_inv = monomial_map(e.inverse_unimodular());
    return compose(compose(conjugator, f, true), conjugator_inv, true);
}

SymbolicDiagonal SymbolicDiagonal::all_equal(int n) {
    IntMatrix e(n);
    for (int j = 0; j < n; ++j) e.at(0, j) = 1;
    return SymbolicDiagonal(std::move(e));
}

std::vector<Rational> apply_exponent_matrix(const std::vector<Rational>& lambdas,
                                            const IntMatrix& k) {
    const int n = k.size();
    if (static_cast<int>(lambdas.size()) != n)
        throw precondition_error("apply_exponent_matrix: size mismatch");
    std::vector<Rational> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= rational_pow(lambdas[i], k.at(i, j));
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

OrbitClassification classify_impl(int n, int radius,
                                  const std::function<bool(const IntMatrix&)>& moves) {
    auto [m1, m2] = a1_a2_matrices(n);
    const IntMatrix image_a = m1 * m1;
    const IntMatrix image_b = m2 * m2;
    auto witness = first_word_where(image_a, image_b, radius,
                                    [&](const GroupWord& w, const IntMatrix& value) {
                                        return !w.is_identity() && moves(value);
                                    });
    if (witness) return {false, false, radius, std::move(witness)};
    return {true, false, radius, std::nullopt};
}

}  // namespace

OrbitClassification diag_orbit_classify(const SymbolicDiagonal& diag, int radius) {
    if (radius < 1) throw precondition_error("diag_orbit_classify: radius must be >= 1");
    const int n = diag.exponents.size();

    // Constant rows commute with every column-sum-1 matrix: fixed without
    // any enumeration.
    bool rows_constant = true;
    for (int i = 0; i < n && rows_constant; ++i)
        for (int j = 1; j < n && rows_constant; ++j)
            rows_constant = diag.exponents.at(i, j) == diag.exponents.at(i, 0);
    if (rows_constant) return {true, true, radius, std::nullopt};

    return classify_impl(n, radius, [&](const IntMatrix& value) {
        return !(diag.exponents * value == diag.exponents);
    });
}

OrbitClassification diag_orbit_classify(const DiagonalSpec& diag, int radius) {
    if (radius < 1) throw precondition_error("diag_orbit_classify: radius must be >= 1");
    const int n = diag.dim();
    return classify_impl(n, radius, [&](const IntMatrix& value) {
        return apply_exponent_matrix(diag.lambdas, value) != diag.lambdas;
    });
}

}  // namespace cremona
