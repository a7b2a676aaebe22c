#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "fuchs/conjclass.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/isometry.hpp"
#include "fuchs/word.hpp"

namespace fuchs {

/// Assignment of isometries to the free-group generators; a marked point
/// of the character variety. Discreteness is not certified; a Jorgensen
/// spot check on the generator pair is recorded as advisory only.
class Representation {
public:
    Representation(std::vector<Isometry> generators, std::string label,
                   std::optional<double> perturbation = std::nullopt)
        : generators_(std::move(generators)), label_(std::move(label)),
          perturbation_(perturbation) {
        if (generators_.empty()) throw config_error("representation needs generators");
    }

    int rank() const { return static_cast<int>(generators_.size()); }
    const std::string& label() const { return label_; }
    std::optional<double> perturbation() const { return perturbation_; }

    const Isometry& generator(int i) const { return generators_.at(i); }

    Isometry image(char letter) const {
        const Isometry& g = generators_.at(letter_generator(letter));
        return letter_is_inverse(letter) ? g.inverse() : g;
    }

    bool generators_hyperbolic() const {
        for (const Isometry& g : generators_)
            if (classify(g) != IsometryKind::hyperbolic) return false;
        return true;
    }

    /// |tr^2 a - 4| + |tr [a,b] - 2| >= 1 holds in every discrete
    /// non-elementary group; failure flags a suspect preset.
    bool jorgensen_spot_check() const {
        if (rank() < 2) return true;
        const Isometry& a = generators_[0];
        const Isometry& b = generators_[1];
        const double t2 = a.trace() * a.trace();
        const double tc = detail::commutator_trace(a, b);
        return std::abs(t2 - 4.0) + std::abs(tc - 2.0) >= 1.0 - kCmpTol;
    }

private:
    std::vector<Isometry> generators_;
    std::string label_;
    std::optional<double> perturbation_;
};

inline Isometry evaluate(const Representation& rep, const Word& w) {
    Isometry m = Isometry::identity();
    for (char ch : w) m = compose(m, rep.image(ch));
    return m;
}

/// Trace of the image, classification, and axis computed through the
/// cyclic decomposition: the core is evaluated as a matrix and the axis is
/// transported endpoint-wise by the conjugator. Conjugated words otherwise
/// cancel catastrophically in floating point once entries are large.
inline double word_abs_trace(const Representation& rep, const Word& w) {
    return std::abs(evaluate(rep, cyclic_reduce(w)).trace());
}

inline IsometryKind word_kind(const Representation& rep, const Word& w) {
    return classify(evaluate(rep, cyclic_reduce(w)));
}

inline Geodesic word_axis(const Representation& rep, const Word& w) {
    const CyclicDecomposition dec = cyclic_decompose(w);
    Geodesic core_axis = axis(evaluate(rep, dec.core));
    if (dec.conjugator.empty()) return core_axis;
    return apply(evaluate(rep, dec.conjugator), core_axis);
}

inline Representation conjugate_representation(const Representation& rep, const Isometry& g) {
    std::vector<Isometry> gens;
    gens.reserve(rep.rank());
    for (int i = 0; i < rep.rank(); ++i) gens.push_back(conjugate(g, rep.generator(i)));
    return Representation(gens, rep.label() + "~conj", rep.perturbation());
}

// ---- presets -------------------------------------------------------------

/// Arithmetic once-punctured torus: a -> [[1,1],[1,2]], b -> [[1,-1],[-1,2]].
/// Generator traces 3, commutator parabolic (trace -2 as an SL2 product).
inline Representation preset_modular_torus() {
    return Representation({Isometry(1, 1, 1, 2), Isometry(1, -1, -1, 2)}, "modular_torus");
}

/// Generic instance: the modular torus moved time s along the shear flow
/// of the a-curve, ρ_s(b) = T_s ρ(b) with T_s the translation of length s
/// along the axis of ρ(a). Generator traces become irrational while the
/// group stays Fuchsian, which is what the generic experiments need.
inline Representation preset_perturbed_torus(double s) {
    const Representation base = preset_modular_torus();
    const Isometry shear = translation_along(base.generator(0), s);
    char label[64];
    std::snprintf(label, sizeof(label), "perturbed_torus(%g)", s);
    return Representation({base.generator(0), compose(shear, base.generator(1))}, label, s);
}

/// Two hyperbolic generators with disjoint axes: translation length ln(lam)
/// along (-1,1) and ln(mu) along (offset-1, offset+1). Second-kind group
/// for the separation experiments; offset > 2 keeps the axes disjoint.
inline Representation preset_schottky(double lam, double mu, double offset) {
    if (!(lam > 1.0) || !(mu > 1.0)) throw config_error("schottky multipliers must exceed 1");
    const Geodesic axis_a(BoundaryPoint(-1.0), BoundaryPoint(1.0));
    const Geodesic axis_b(BoundaryPoint(offset - 1.0), BoundaryPoint(offset + 1.0));
    char label[96];
    std::snprintf(label, sizeof(label), "schottky(%g,%g,%g)", lam, mu, offset);
    return Representation(
        {translation_along(axis_a, std::log(lam)), translation_along(axis_b, std::log(mu))},
        label);
}

/// Parses "modular_torus", "perturbed_torus(s)" or "schottky(l,m,off)".
inline Representation preset(const std::string& name) {
    auto args_of = [&](std::string_view head) -> std::optional<std::vector<double>> {
        if (name.size() < head.size() || name.compare(0, head.size(), head) != 0)
            return std::nullopt;
        if (name.size() == head.size()) return std::vector<double>{};
        if (name[head.size()] != '(' || name.back() != ')') return std::nullopt;
        std::vector<double> args;
        std::string body = name.substr(head.size() + 1, name.size() - head.size() - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t next = body.find(',', pos);
            if (next == std::string::npos) next = body.size();
            try {
                args.push_back(std::stod(body.substr(pos, next - pos)));
            } catch (const std::exception&) {
                return std::nullopt;
            }
            pos = next + 1;
        }
        return args;
    };
    if (name == "modular_torus") return preset_modular_torus();
    if (auto args = args_of("perturbed_torus"); args && args->size() == 1)
        return preset_perturbed_torus((*args)[0]);
    if (auto args = args_of("schottky"); args && args->size() == 3)
        return preset_schottky((*args)[0], (*args)[1], (*args)[2]);
    throw unknown_preset("unknown preset: " + name);
}

inline std::vector<std::string> preset_catalogue() {
    return {"modular_torus", "perturbed_torus(s)", "schottky(lambda,mu,offset)"};
}

} // namespace fuchs
