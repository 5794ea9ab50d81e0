#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace cograph {

/// Disjoint sets with union by size and no path compression, so every
/// union can be undone in LIFO order.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) {
            parent_[i] = static_cast<int>(i);
        }
    }

    int find(int x) const {
        while (parent_[x] != x) {
            x = parent_[x];
        }
        return x;
    }

    /// Returns false (and records nothing) when a and b are already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }

    std::size_t checkpoint() const { return history_.size(); }

    void rollback(std::size_t mark) {
        while (history_.size() > mark) {
            const int b = history_.back();
            history_.pop_back();
            const int a = parent_[b];
            size_[a] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

}  // namespace cograph
