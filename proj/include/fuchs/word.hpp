#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "fuchs/errors.hpp"

namespace fuchs {

/// Free-group words over generators a, b, ... with inverses written as the
/// corresponding capitals A, B, ... Rank defaults to 2 everywhere but the
/// word routines are rank-generic.
using Word = std::string;

inline constexpr int kDefaultRank = 2;

inline char letter_inverse(char ch) {
    return (ch >= 'a' && ch <= 'z') ? static_cast<char>(ch - 'a' + 'A')
                                    : static_cast<char>(ch - 'A' + 'a');
}

inline int letter_generator(char ch) {
    return (ch >= 'a' && ch <= 'z') ? ch - 'a' : ch - 'A';
}

inline bool letter_is_inverse(char ch) { return ch >= 'A' && ch <= 'Z'; }

/// Collation rank: a < A < b < B < ...
inline int letter_rank(char ch) {
    return 2 * letter_generator(ch) + (letter_is_inverse(ch) ? 1 : 0);
}

inline bool valid_word(std::string_view w, int rank = kDefaultRank) {
    for (char ch : w) {
        const bool lower = ch >= 'a' && ch < static_cast<char>('a' + rank);
        const bool upper = ch >= 'A' && ch < static_cast<char>('A' + rank);
        if (!lower && !upper) return false;
    }
    return true;
}

/// Shortlex with the letter collation above; the canonical order used for
/// every deterministic listing in the library.
inline bool word_less(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    for (size_t i = 0; i < lhs.size(); ++i) {
        const int rl = letter_rank(lhs[i]), rr = letter_rank(rhs[i]);
        if (rl != rr) return rl < rr;
    }
    return false;
}

inline Word freely_reduce(std::string_view w) {
    Word out;
    out.reserve(w.size());
    for (char ch : w) {
        if (!out.empty() && out.back() == letter_inverse(ch)) out.pop_back();
        else out.push_back(ch);
    }
    return out;
}

inline Word word_inverse(std::string_view w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
    return out;
}

inline Word word_concat(std::string_view u, std::string_view v) {
    Word out(u);
    out.append(v);
    return freely_reduce(out);
}

inline bool is_cyclically_reduced(const Word& w) {
    return w.size() < 2 || w.front() != letter_inverse(w.back());
}

/// w = conj * core * conj^-1 with core cyclically reduced. Evaluating the
/// core and transporting by the conjugator avoids the cancellation that
/// makes direct products of huge matrices unusable.
struct CyclicDecomposition {
    Word conjugator;
    Word core;
};

inline CyclicDecomposition cyclic_decompose(std::string_view input) {
    Word w = freely_reduce(input);
    Word conj;
    while (w.size() > 1 && w.front() == letter_inverse(w.back())) {
        conj.push_back(w.front());
        w = w.substr(1, w.size() - 2);
    }
    return {conj, w};
}

inline Word cyclic_reduce(std::string_view w) { return cyclic_decompose(w).core; }

inline Word rotate(const Word& w, size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    return w.substr(k) + w.substr(0, k);
}

/// Least rotation in the canonical order.
inline Word least_rotation(const Word& w) {
    Word best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (word_less(r, best)) best = std::move(r);
    }
    return best;
}

inline Word canonical_oriented(std::string_view w) {
    const Word c = cyclic_reduce(w);
    if (c.empty()) return c;
    return least_rotation(c);
}

inline Word canonical_unoriented(std::string_view w) {
    const Word c1 = canonical_oriented(w);
    if (c1.empty()) return c1;
    const Word c2 = canonical_oriented(word_inverse(c1));
    return word_less(c2, c1) ? c2 : c1;
}

/// A cyclically reduced word is a proper power iff it equals one of its
/// nontrivial rotations; test the divisor periods.
inline bool is_primitive_word(const Word& w) {
    const size_t n = w.size();
    if (n == 0) return false;
    for (size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
        if (periodic) return false;
    }
    return true;
}

/// Total signed occurrence count of generator gen (letters count +1, their
/// inverses -1); the crossing bookkeeping for twists.
inline int signed_letter_sum(const Word& w, int gen) {
    int sum = 0;
    for (char ch : w)
        if (letter_generator(ch) == gen) sum += letter_is_inverse(ch) ? -1 : 1;
    return sum;
}

/// Canonical representative of the double coset <u> k <v>: the shortlex
/// least word u^m k v^n. Power cancellation saturates once |m| exceeds
/// |k| / |u| + 1, so a bounded window suffices. This is the exact orbit
/// key for a crossing configuration of the axes of u and k v k^-1.
inline Word double_coset_canonical(const Word& u, const Word& k, const Word& v) {
    const int mbound = static_cast<int>(k.size() / std::max<size_t>(1, u.size())) + 2;
    const int nbound = static_cast<int>(k.size() / std::max<size_t>(1, v.size())) + 2;
    const Word ui = word_inverse(u), vi = word_inverse(v);

    std::vector<Word> lefts{k};
    Word up = k, down = k;
    for (int m = 0; m < mbound; ++m) {
        up = freely_reduce(u + up);
        down = freely_reduce(ui + down);
        lefts.push_back(up);
        lefts.push_back(down);
    }
    Word best;
    bool first = true;
    for (const Word& left : lefts) {
        Word fwd = left, bwd = left;
        for (int n = 0; n <= nbound; ++n) {
            if (n > 0) {
                fwd = freely_reduce(fwd + v);
                bwd = freely_reduce(bwd + vi);
            }
            for (const Word* cand : {&fwd, &bwd}) {
                if (first || word_less(*cand, best)) {
                    best = *cand;
                    first = false;
                }
            }
        }
    }
    return best;
}

} // namespace fuchs
