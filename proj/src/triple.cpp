#include "cograph/triple.hpp"

#include "cograph/graph.hpp"

#include <algorithm>

namespace cograph {

std::string to_string(Triple t) {
    return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

Triple derive_union(Triple up, Triple down) {
    return {std::max(up.p, down.p), std::max(up.q, down.q), up.r + down.r};
}

std::vector<Triple> derive_join(Triple up, Triple down) {
    const int max_cross = std::min(up.r, down.q) + std::min(up.q, down.r);
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(max_cross) + 1);
    for (int s = 0; s <= max_cross; ++s) {
        out.push_back({up.p + down.p + s, up.q + down.q - s, up.r + down.r - s});
    }
    return out;
}

TripleSet::TripleSet(Box box) : box_(box) {
    if (box.p < 0 || box.q < 0 || box.r < 0) {
        throw InputError("box components must be non-negative");
    }
    grid_.assign(static_cast<std::size_t>(box.p + 1) * (box.q + 1) * (box.r + 1), 0);
}

bool TripleSet::in_box(Triple t) const {
    return t.p >= 0 && t.q >= 0 && t.r >= 0 && t.p <= box_.p && t.q <= box_.q && t.r <= box_.r;
}

std::size_t TripleSet::index(Triple t) const {
    return (static_cast<std::size_t>(t.p) * (box_.q + 1) + t.q) * (box_.r + 1) + t.r;
}

bool TripleSet::contains(Triple t) const {
    return in_box(t) && grid_[index(t)] != 0;
}

void TripleSet::insert(Triple t) {
    if (!in_box(t)) {
        throw InputError("triple " + to_string(t) + " outside the box");
    }
    grid_[index(t)] = 1;
}

std::vector<Triple> TripleSet::frontier() const {
    std::vector<Triple> out;
    for (int p = 0; p <= box_.p; ++p) {
        for (int q = 0; q <= box_.q; ++q) {
            for (int r = 0; r <= box_.r; ++r) {
                const Triple t{p, q, r};
                if (!contains(t)) {
                    continue;
                }
                const bool minimal = !contains({p - 1, q, r}) && !contains({p, q - 1, r}) && !contains({p, q, r - 1});
                if (minimal) {
                    out.push_back(t);
                }
            }
        }
    }
    return out;
}

std::size_t TripleSet::count() const {
    return static_cast<std::size_t>(std::ranges::count(grid_, std::uint8_t{1}));
}

bool TripleSet::is_upward_closed() const {
    for (int p = 0; p <= box_.p; ++p) {
        for (int q = 0; q <= box_.q; ++q) {
            for (int r = 0; r <= box_.r; ++r) {
                if (!contains({p, q, r})) {
                    continue;
                }
                for (Triple next : {Triple{p + 1, q, r}, Triple{p, q + 1, r}, Triple{p, q, r + 1}}) {
                    if (in_box(next) && !contains(next)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool TripleSet::is_exchange_closed() const {
    for (int p = 0; p <= box_.p; ++p) {
        for (int q = 0; q <= box_.q; ++q) {
            for (int r = 0; r <= box_.r; ++r) {
                if (!contains({p, q, r})) {
                    continue;
                }
                for (Triple next : {Triple{p + 1, q - 1, r}, Triple{p, q + 1, r - 1}, Triple{p + 1, q, r - 1}}) {
                    if (in_box(next) && !contains(next)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace cograph
