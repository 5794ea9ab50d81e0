#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cograph {

/// Budget of a (p,q,r)-partition: p forest classes, q independent classes,
/// at most r deleted vertices.
struct Triple {
    int p = 0;
    int q = 0;
    int r = 0;

    auto operator<=>(const Triple&) const = default;
};

/// p+q+r, the weight bounding the solver's search.
inline int solver_weight(Triple t) { return t.p + t.q + t.r; }
/// 2p+q+r, additive along join derivations.
inline int obstruction_weight(Triple t) { return 2 * t.p + t.q + t.r; }

inline bool dominated_by(Triple a, Triple b) { return a.p <= b.p && a.q <= b.q && a.r <= b.r; }

std::string to_string(Triple t);

/// Triple derived for a disjoint union: shared classes, summed deletions.
Triple derive_union(Triple up, Triple down);

/// Triples derived for a join. A forest meeting both sides is a star whose
/// centre is a deleted vertex of one side and whose leaves are one
/// independent class of the other; t_up stars have their centre on the up
/// side (t_up <= min(r_up, q_down)), t_down on the down side. The result
/// depends only on s = t_up + t_down and is returned ordered by s.
std::vector<Triple> derive_join(Triple up, Triple down);

struct Box {
    int p = 0;
    int q = 0;
    int r = 0;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Feasible triples inside a box, as a dense boolean grid.
class TripleSet {
public:
    explicit TripleSet(Box box);

    Box box() const { return box_; }
    bool in_box(Triple t) const;
    bool contains(Triple t) const;
    void insert(Triple t);

    /// Componentwise-minimal members, lexicographically sorted.
    std::vector<Triple> frontier() const;
    std::size_t count() const;

    bool is_upward_closed() const;
    /// (p,q,r) in the set implies (p+1,q-1,r), (p,q+1,r-1) and (p+1,q,r-1)
    /// are too, whenever those lie in the box.
    bool is_exchange_closed() const;

    friend bool operator==(const TripleSet&, const TripleSet&) = default;

private:
    std::size_t index(Triple t) const;

    Box box_;
    std::vector<std::uint8_t> grid_;
};

}  // namespace cograph
