#pragma once

#include "cograph/cotree.hpp"

namespace cograph {

/// Largest thin clique K_s (omega) and thick clique, the complement of
/// sK_2 (tau), with strength max(omega, tau + 1).
struct StrengthProfile {
    int omega = 0;
    int tau = 0;
    int strength = 0;

    friend bool operator==(const StrengthProfile&, const StrengthProfile&) = default;
};

/// Bottom-up over the cotree. A thick s-clique's two-vertex parts are
/// non-adjacent pairs, so at a join each part lies inside one child and tau
/// adds up; for s >= 2 it is connected, so at a union it sits inside one
/// component, while any union offers a thick 1-clique.
StrengthProfile strength_profile(const Cotree& t);

/// max(0, s(G) - 2); on cographs with at least two vertices this is q(G).
int q_from_strength(const Cotree& t);

}  // namespace cograph
