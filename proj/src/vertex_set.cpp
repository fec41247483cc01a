#include "medgraph/vertex_set.hpp"

#include <bit>
#include <cassert>

namespace medgraph {

VertexSet::VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v)
{
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

} // namespace medgraph
