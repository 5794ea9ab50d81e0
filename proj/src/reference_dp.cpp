#include "cograph/reference_dp.hpp"

#include <array>

namespace cograph {

namespace {

class RegionGrid {
public:
    explicit RegionGrid(Box box) : box_(box), cells_(static_cast<std::size_t>(box.p + 1) * (box.p + box.q + 1) * (box.p + box.r + 1), 0) {}

    bool in_region(Triple t) const {
        return t.p >= 0 && t.q >= 0 && t.r >= 0 && t.p <= box_.p && t.p + t.q <= box_.p + box_.q &&
               t.p + t.r <= box_.p + box_.r;
    }

    bool contains(Triple t) const { return in_region(t) && cells_[index(t)] != 0; }

    void insert(Triple t) {
        if (in_region(t)) {
            cells_[index(t)] = 1;
        }
    }

    template <class F>
    void for_each_point(F&& f) const {
        for (int p = 0; p <= box_.p; ++p) {
            for (int q = 0; q <= box_.p + box_.q - p; ++q) {
                for (int r = 0; r <= box_.p + box_.r - p; ++r) {
                    f(Triple{p, q, r});
                }
            }
        }
    }

    std::vector<Triple> frontier() const {
        std::vector<Triple> out;
        for_each_point([&](Triple t) {
            if (contains(t) && !contains({t.p - 1, t.q, t.r}) && !contains({t.p, t.q - 1, t.r}) &&
                !contains({t.p, t.q, t.r - 1})) {
                out.push_back(t);
            }
        });
        return out;
    }

    void close() {
        std::vector<Triple> work;
        for_each_point([&](Triple t) {
            if (contains(t)) {
                work.push_back(t);
            }
        });
        while (!work.empty()) {
            const Triple t = work.back();
            work.pop_back();
            const std::array<Triple, 6> moves{{{t.p + 1, t.q, t.r},
                                               {t.p, t.q + 1, t.r},
                                               {t.p, t.q, t.r + 1},
                                               {t.p + 1, t.q - 1, t.r},
                                               {t.p, t.q + 1, t.r - 1},
                                               {t.p + 1, t.q, t.r - 1}}};
            for (Triple next : moves) {
                if (in_region(next) && !contains(next)) {
                    insert(next);
                    work.push_back(next);
                }
            }
        }
    }

private:
    std::size_t index(Triple t) const {
        return (static_cast<std::size_t>(t.p) * (box_.p + box_.q + 1) + t.q) * (box_.p + box_.r + 1) + t.r;
    }

    Box box_;
    std::vector<std::uint8_t> cells_;
};

RegionGrid leaf_grid(Box box) {
    RegionGrid g(box);
    g.for_each_point([&](Triple t) {
        if (solver_weight(t) >= 1) {
            g.insert(t);
        }
    });
    return g;
}

RegionGrid combine(NodeKind kind, const RegionGrid& up, const RegionGrid& down, Box box) {
    RegionGrid out(box);
    const auto up_frontier = up.frontier();
    const auto down_frontier = down.frontier();
    for (Triple a : up_frontier) {
        for (Triple b : down_frontier) {
            if (kind == NodeKind::disjoint_union) {
                out.insert(derive_union(a, b));
            } else {
                for (Triple t : derive_join(a, b)) {
                    out.insert(t);
                }
            }
        }
    }
    out.close();
    return out;
}

}  // namespace

TripleSet reference_feasible_set(const Cotree& t, Box box) {
    TripleSet result(box);
    RegionGrid root(box);
    if (t.empty()) {
        root.for_each_point([&](Triple x) { root.insert(x); });
    } else {
        const RegionGrid leaf = leaf_grid(box);
        std::vector<RegionGrid> grids(t.size(), RegionGrid(Box{}));
        auto grid_of = [&](int x) -> const RegionGrid& { return t.node(x).kind == NodeKind::leaf ? leaf : grids[x]; };
        for (int x = 0; x < static_cast<int>(t.size()); ++x) {
            const auto& node = t.node(x);
            if (node.kind == NodeKind::leaf) {
                continue;
            }
            RegionGrid acc = grid_of(node.children.front());
            for (std::size_t i = 1; i < node.children.size(); ++i) {
                acc = combine(node.kind, acc, grid_of(node.children[i]), box);
            }
            grids[x] = std::move(acc);
        }
        root = grid_of(t.root());
    }
    for (int p = 0; p <= box.p; ++p) {
        for (int q = 0; q <= box.q; ++q) {
            for (int r = 0; r <= box.r; ++r) {
                if (root.contains({p, q, r})) {
                    result.insert({p, q, r});
                }
            }
        }
    }
    return result;
}

}  // namespace cograph
