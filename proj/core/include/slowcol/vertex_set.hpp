/*
 * Copyright 2026 the slowcol authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SLOWCOL_VERTEX_SET_HPP
#define SLOWCOL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "slowcol/errors.hpp"

namespace slowcol {

/// Subset of a fixed ground set {0, ..., ground-1}, stored as a bitset.
///
/// All binary operations require both operands to share the same ground size;
/// mixing grounds is always a bug and throws. Iteration is in ascending id
/// order, which keeps every consumer deterministic.
class VertexSet {
public:
    VertexSet() : ground_(0) {}
    explicit VertexSet(int ground) : ground_(check_ground(ground)), words_((ground + 63) / 64, 0) {}

    static VertexSet full(int ground) {
        VertexSet s(ground);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
        s.clear_tail();
        return s;
    }

    static VertexSet of(int ground, std::initializer_list<int> ids) {
        VertexSet s(ground);
        for (int v : ids) s.add(v);
        return s;
    }

    template <class Container>
    static VertexSet of(int ground, const Container& ids) {
        VertexSet s(ground);
        for (int v : ids) s.add(v);
        return s;
    }

    int ground() const { return ground_; }

    bool contains(int v) const {
        check_id(v);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        check_id(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        check_id(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (int i = 0; i < static_cast<int>(words_.size()); ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.ground_ == b.ground_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    bool subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet complement() const {
        VertexSet r(*this);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = ~r.words_[i];
        r.clear_tail();
        return r;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, -1); }

    /// Smallest member greater than v, or -1. v may be -1.
    int next_after(int v) const {
        int start = v + 1;
        if (start >= ground_) return -1;
        int wi = start >> 6;
        std::uint64_t w = words_[wi] >> (start & 63);
        if (w) return start + std::countr_zero(w);
        for (++wi; wi < static_cast<int>(words_.size()); ++wi)
            if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
        return -1;
    }

private:
    static int check_ground(int ground) {
        if (ground < 0) throw BadInput("negative ground size");
        return ground;
    }
    void check_id(int v) const {
        if (v < 0 || v >= ground_)
            throw BadInput("vertex id " + std::to_string(v) + " outside ground of size " +
                           std::to_string(ground_));
    }
    void check_same(const VertexSet& o) const {
        if (ground_ != o.ground_) throw BadInput("vertex sets over different ground sets");
    }
    void clear_tail() {
        int tail = ground_ & 63;
        if (tail && !words_.empty()) words_.back() &= (1ULL << tail) - 1;
    }

    int ground_;
    std::vector<std::uint64_t> words_;
};

/// Order on subsets by their ascending member sequences, so {0,2} < {1} and
/// {0} < {0,1}. Used for every deterministic tie-break over vertex sets.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int va = a.first();
    int vb = b.first();
    while (va != -1 && vb != -1) {
        if (va != vb) return va < vb;
        va = a.next_after(va);
        vb = b.next_after(vb);
    }
    return vb != -1;  // a ran out first: proper prefix sorts before
}

}  // namespace slowcol

#endif  // SLOWCOL_VERTEX_SET_HPP
