#pragma once

#include <utility>
#include <vector>

#include "fuchs/ball.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/representation.hpp"

namespace fuchs {

inline constexpr double kReduceStep = 1e-12;

/// Fundamental-domain machinery around the center i: half-planes
/// d(z, center) <= d(z, g center) over a generating ball. Used to pick one
/// crossing representative per group orbit when counting multiplicities.
struct DirichletDomain {
    HPoint center;
    std::vector<Word> moves;          // generating set used
    std::vector<HPoint> translates;   // g * center per move

    bool contains(const HPoint& p, double slack = kCmpTol) const {
        const double dc = distance(p, center);
        for (const HPoint& t : translates)
            if (distance(p, t) < dc - slack) return false;
        return true;
    }
};

inline DirichletDomain make_dirichlet(const Representation& rep, int depth = 2) {
    DirichletDomain dom{HPoint::center(), {}, {}};
    for (const Word& w : enumerate_ball(depth, rep.rank()).words) {
        if (w.empty()) continue;
        dom.moves.push_back(w);
        dom.translates.push_back(apply(evaluate(rep, w), dom.center));
    }
    return dom;
}

namespace detail {

/// Precomputed greedy reducer over a small ball of moves: descend toward
/// the center while the distance strictly decreases, then take the
/// (distance, x, y)-least point of the stalled point's move neighborhood
/// so that both points of an orbit pair land on one representative.
class PointReducer {
public:
    explicit PointReducer(const Representation& rep, int depth = 2) {
        for (const Word& w : enumerate_ball(depth, rep.rank()).words) {
            if (w.empty()) continue;
            words_.push_back(w);
            moves_.push_back(evaluate(rep, w));
        }
    }

    std::pair<HPoint, Word> reduce(const HPoint& p) const {
        const HPoint center = HPoint::center();
        HPoint cur = p;
        Word applied;
        double dcur = distance(cur, center);
        for (;;) {
            int best = -1;
            HPoint best_img = cur;
            double dbest = dcur - kReduceStep;
            for (size_t i = 0; i < moves_.size(); ++i) {
                const HPoint img = apply(moves_[i], cur);
                const double d = distance(img, center);
                if (d < dbest - 1e-15) {
                    best = static_cast<int>(i);
                    best_img = img;
                    dbest = d;
                }
            }
            if (best < 0) break;
            cur = best_img;
            dcur = dbest;
            applied = word_concat(words_[best], applied);
        }
        return {cur, applied};
    }

    HPoint canonical(const HPoint& p) const {
        HPoint cur = reduce(p).first;
        const HPoint center = HPoint::center();
        HPoint winner = cur;
        double dwin = distance(cur, center);
        for (const Isometry& g : moves_) {
            const HPoint img = apply(g, cur);
            const double d = distance(img, center);
            if (d < dwin - kCmpTol ||
                (d < dwin + kCmpTol &&
                 (img.x < winner.x - kCmpTol ||
                  (img.x < winner.x + kCmpTol && img.y < winner.y - kCmpTol)))) {
                winner = img;
                dwin = d;
            }
        }
        return winner;
    }

private:
    std::vector<Word> words_;
    std::vector<Isometry> moves_;
};

} // namespace detail

/// Greedy descent toward the center: applies the move that most decreases
/// d(., i) while the decrease exceeds kReduceStep. Returns the reduced
/// point and the word whose image maps the input onto it.
inline std::pair<HPoint, Word> reduce_point(const Representation& rep, const HPoint& p,
                                            int depth = 2) {
    return detail::PointReducer(rep, depth).reduce(p);
}

/// Canonical orbit representative near the center; stable across the orbit
/// even when greedy descent stalls one move apart.
inline HPoint canonical_orbit_point(const Representation& rep, const HPoint& p, int depth = 2) {
    return detail::PointReducer(rep, depth).canonical(p);
}

} // namespace fuchs
