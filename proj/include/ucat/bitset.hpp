// Dynamic fixed-width bitset over vertex indices (the VertexSubset type).
#pragma once

#include <cstdint>
#include <vector>

namespace ucat {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const;
    bool any() const;
    bool none() const { return !any(); }
    int first_set() const;  // -1 if none

    bool is_subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    Bitset and_not(const Bitset& o) const;

    friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }
    // Numeric order on the bit pattern (vertex 0 = least significant bit).
    friend bool operator<(const Bitset& a, const Bitset& b);

    std::vector<int> to_vector() const;
    static Bitset of(int n, std::initializer_list<int> bits);

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t j = 0; j < w_.size(); j++) {
            std::uint64_t x = w_[j];
            while (x) {
                f(static_cast<int>(j * 64) + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace ucat
