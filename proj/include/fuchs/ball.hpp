#pragma once

#include <cstdint>
#include <vector>

#include "fuchs/word.hpp"

namespace fuchs {

inline constexpr int kWordDepthCap = 12;
inline constexpr int kConjDepthCap = 10;

/// All freely reduced words of length <= depth, shortlex order. Size is
/// 2 * 3^depth - 1 in rank 2.
struct Ball {
    int rank;
    int depth;
    std::vector<Word> words;
};

inline Ball enumerate_ball(int depth, int rank = kDefaultRank, bool unsafe_depth = false) {
    if (depth < 1) throw config_error("ball depth must be >= 1");
    if (!unsafe_depth && depth > kWordDepthCap)
        throw depth_cap_exceeded("ball depth exceeds cap");
    Ball ball{rank, depth, {Word{}}};
    std::vector<Word> frontier{Word{}};
    for (int level = 0; level < depth; ++level) {
        std::vector<Word> next;
        next.reserve(frontier.size() * (2 * rank));
        for (const Word& w : frontier) {
            for (int gen = 0; gen < rank; ++gen) {
                for (char ch : {static_cast<char>('a' + gen), static_cast<char>('A' + gen)}) {
                    if (w.empty() || w.back() != letter_inverse(ch)) next.push_back(w + ch);
                }
            }
        }
        // Children of shortlex-ordered parents interleave; restore the order.
        std::sort(next.begin(), next.end(), word_less);
        ball.words.insert(ball.words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return ball;
}

inline std::uint64_t expected_ball_size(int depth, int rank = kDefaultRank) {
    std::uint64_t size = 1, layer = 1;
    for (int level = 0; level < depth; ++level) {
        layer *= (level == 0) ? static_cast<std::uint64_t>(2 * rank)
                              : static_cast<std::uint64_t>(2 * rank - 1);
        size += layer;
    }
    return size;
}

} // namespace fuchs
