#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace medgraph {

using Vertex = int;

// Fixed-universe bitset over 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, const std::vector<Vertex>& members);

    static VertexSet full(int universe);

    int universe() const { return n_; }
    bool contains(Vertex v) const {
        return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);
    int count() const;
    bool empty() const;
    std::vector<Vertex> members() const;

    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace medgraph
