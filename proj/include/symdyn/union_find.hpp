#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace symdyn {

// Disjoint-set forest with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) const {
        std::size_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root) {
            std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    bool unite(std::size_t a, std::size_t b) {
        std::size_t ra = find(a);
        std::size_t rb = find(b);
        if (ra == rb)
            return false;
        if (size_[ra] < size_[rb])
            std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        return true;
    }

    bool same(std::size_t a, std::size_t b) const { return find(a) == find(b); }

    std::size_t size() const { return parent_.size(); }

private:
    mutable std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace symdyn
