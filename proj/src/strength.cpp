#include "cograph/strength.hpp"

#include <algorithm>

namespace cograph {

StrengthProfile strength_profile(const Cotree& t) {
    if (t.empty()) {
        throw InputError("strength of the empty graph is undefined");
    }
    std::vector<int> omega(t.size(), 0);
    std::vector<int> tau(t.size(), 0);
    for (std::size_t x = 0; x < t.size(); ++x) {
        const auto& node = t.node(static_cast<int>(x));
        switch (node.kind) {
            case NodeKind::leaf:
                omega[x] = 1;
                tau[x] = 0;
                break;
            case NodeKind::disjoint_union:
                tau[x] = 1;
                for (int c : node.children) {
                    omega[x] = std::max(omega[x], omega[c]);
                    tau[x] = std::max(tau[x], tau[c]);
                }
                break;
            case NodeKind::join:
                for (int c : node.children) {
                    omega[x] += omega[c];
                    tau[x] += tau[c];
                }
                break;
        }
    }
    StrengthProfile out{omega.back(), tau.back(), 0};
    out.strength = std::max(out.omega, out.tau + 1);
    return out;
}

int q_from_strength(const Cotree& t) {
    return std::max(0, strength_profile(t).strength - 2);
}

}  // namespace cograph
