#include "ucat/bitset.hpp"

#include <cassert>

namespace ucat {

int Bitset::count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
}

bool Bitset::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

int Bitset::first_set() const {
    for (std::size_t j = 0; j < w_.size(); j++)
        if (w_[j]) return static_cast<int>(j * 64) + __builtin_ctzll(w_[j]);
    return -1;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t j = 0; j < w_.size(); j++)
        if (w_[j] & ~o.w_[j]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t j = 0; j < w_.size(); j++)
        if (w_[j] & o.w_[j]) return true;
    return false;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t j = 0; j < w_.size(); j++) w_[j] |= o.w_[j];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t j = 0; j < w_.size(); j++) w_[j] &= o.w_[j];
    return *this;
}

Bitset Bitset::and_not(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r(n_);
    for (std::size_t j = 0; j < w_.size(); j++) r.w_[j] = w_[j] & ~o.w_[j];
    return r;
}

bool operator<(const Bitset& a, const Bitset& b) {
    assert(a.n_ == b.n_);
    for (std::size_t j = a.w_.size(); j-- > 0;)
        if (a.w_[j] != b.w_[j]) return a.w_[j] < b.w_[j];
    return false;
}

std::vector<int> Bitset::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Bitset Bitset::of(int n, std::initializer_list<int> bits) {
    Bitset s(n);
    for (int b : bits) s.set(b);
    return s;
}

}  // namespace ucat
