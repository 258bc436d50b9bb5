// Nonnegative rational values on the vertices of a graph, extended
// edge-linearly over the geometric realization.
#pragma once

#include <vector>

#include "ucat/bitset.hpp"
#include "ucat/rational.hpp"

namespace ucat {

class Graph;

class VertexFunction {
public:
    VertexFunction() = default;
    // Throws std::invalid_argument on negative values.
    explicit VertexFunction(std::vector<Rat> values);
    static VertexFunction zero(int n) { return VertexFunction(std::vector<Rat>(n, Rat(0))); }
    static VertexFunction constant(int n, Rat c);

    int size() const { return static_cast<int>(values_.size()); }
    const Rat& operator[](int v) const { return values_[v]; }
    const std::vector<Rat>& values() const { return values_; }

    bool is_zero() const;
    Bitset support() const;  // vertices with positive value
    Rat max_value() const;

    VertexFunction pow(unsigned p) const;
    // Zero outside `keep`.
    VertexFunction restricted_to(const Bitset& keep) const;

    // Pointwise; subtraction throws if any result would be negative.
    friend VertexFunction operator+(const VertexFunction& a, const VertexFunction& b);
    friend VertexFunction operator-(const VertexFunction& a, const VertexFunction& b);

    friend bool operator==(const VertexFunction& a, const VertexFunction& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<Rat> values_;
};

// Pointwise max of a family (all same size).
VertexFunction pointwise_max(const std::vector<VertexFunction>& fs);
// Pointwise sum of a family (all same size).
VertexFunction pointwise_sum(int n, const std::vector<VertexFunction>& fs);

}  // namespace ucat
