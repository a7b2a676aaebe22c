#pragma once

#include <algorithm>
#include <vector>

#include "fuchs/conjclass.hpp"
#include "fuchs/parallel.hpp"
#include "fuchs/representation.hpp"

namespace fuchs {

/// One clustered value of the truncated length spectrum.
struct LengthEntry {
    double length = 0.0;              // smallest member of the cluster
    int multiplicity = 0;
    std::vector<Word> witnesses;      // canonical class words, sorted
};

/// Lengths of all unoriented primitive classes to depth, hyperbolic images
/// only, clustered within tol and sorted ascending.
inline std::vector<LengthEntry> length_spectrum(const Representation& rep, int depth,
                                                double tol = kCmpTol, int workers = 1,
                                                bool unsafe_depth = false) {
    const std::vector<ConjClass> classes =
        conjugacy_classes(depth, /*oriented=*/false, rep.rank(), unsafe_depth);

    struct Item {
        double length = -1.0;
        const Word* word = nullptr;
    };
    std::vector<Item> items = parallel_map<Item>(classes.size(), workers, [&](size_t i) {
        Item item;
        if (!classes[i].primitive()) return item;
        if (word_kind(rep, classes[i].canonical) != IsometryKind::hyperbolic) return item;
        item.length = 2.0 * std::acosh(word_abs_trace(rep, classes[i].canonical) / 2.0);
        item.word = &classes[i].canonical;
        return item;
    });
    items.erase(std::remove_if(items.begin(), items.end(),
                               [](const Item& it) { return it.word == nullptr; }),
                items.end());
    std::stable_sort(items.begin(), items.end(), [](const Item& lhs, const Item& rhs) {
        if (lhs.length != rhs.length) return lhs.length < rhs.length;
        return word_less(*lhs.word, *rhs.word);
    });

    // Chain clustering over the sorted values: a gap below tol extends the
    // current entry.
    std::vector<LengthEntry> spectrum;
    double last = 0.0;
    for (const Item& it : items) {
        if (spectrum.empty() || it.length - last >= tol)
            spectrum.push_back(LengthEntry{it.length, 0, {}});
        LengthEntry& entry = spectrum.back();
        entry.multiplicity += 1;
        entry.witnesses.push_back(*it.word);
        last = it.length;
    }
    return spectrum;
}

} // namespace fuchs
