#pragma once

#include <set>
#include <vector>

#include "fuchs/ball.hpp"
#include "fuchs/word.hpp"

namespace fuchs {

/// Conjugacy class of the free group, keyed by its canonical word: the
/// least rotation of the cyclic reduction, minimized also over inversion
/// when unoriented. Canonicalization is idempotent.
struct ConjClass {
    Word canonical;
    bool oriented;

    bool primitive() const { return is_primitive_word(canonical); }
};

inline bool operator<(const ConjClass& lhs, const ConjClass& rhs) {
    return word_less(lhs.canonical, rhs.canonical);
}
inline bool operator==(const ConjClass& lhs, const ConjClass& rhs) {
    return lhs.canonical == rhs.canonical && lhs.oriented == rhs.oriented;
}

inline ConjClass make_class(std::string_view w, bool oriented) {
    return ConjClass{oriented ? canonical_oriented(w) : canonical_unoriented(w), oriented};
}

/// All classes with a cyclically reduced representative of length <= depth,
/// canonical order, empty word excluded. Unoriented mode merges each class
/// with its inverse.
inline std::vector<ConjClass> conjugacy_classes(int depth, bool oriented,
                                                int rank = kDefaultRank,
                                                bool unsafe_depth = false) {
    const Ball ball = enumerate_ball(depth, rank, unsafe_depth);
    std::set<Word, bool (*)(const Word&, const Word&)> canon(word_less);
    for (const Word& w : ball.words) {
        if (w.empty()) continue;
        Word c = oriented ? canonical_oriented(w) : canonical_unoriented(w);
        if (!c.empty()) canon.insert(std::move(c));
    }
    std::vector<ConjClass> out;
    out.reserve(canon.size());
    for (const Word& w : canon) out.push_back(ConjClass{w, oriented});
    return out;
}

inline bool is_primitive(const ConjClass& c) { return c.primitive(); }

} // namespace fuchs
