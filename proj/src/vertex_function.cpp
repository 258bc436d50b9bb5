#include "ucat/vertex_function.hpp"

#include <stdexcept>

namespace ucat {

VertexFunction::VertexFunction(std::vector<Rat> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); v++)
        if (values_[v].is_negative())
            throw std::invalid_argument("negative value " + values_[v].str() + " at vertex " +
                                        std::to_string(v));
}

VertexFunction VertexFunction::constant(int n, Rat c) {
    return VertexFunction(std::vector<Rat>(n, std::move(c)));
}

bool VertexFunction::is_zero() const {
    for (const auto& x : values_)
        if (!x.is_zero()) return false;
    return true;
}

Bitset VertexFunction::support() const {
    Bitset s(size());
    for (int v = 0; v < size(); v++)
        if (values_[v].is_positive()) s.set(v);
    return s;
}

Rat VertexFunction::max_value() const {
    Rat m(0);
    for (const auto& x : values_)
        if (x > m) m = x;
    return m;
}

VertexFunction VertexFunction::pow(unsigned p) const {
    std::vector<Rat> out;
    out.reserve(values_.size());
    for (const auto& x : values_) out.push_back(x.pow(p));
    return VertexFunction(std::move(out));
}

VertexFunction VertexFunction::restricted_to(const Bitset& keep) const {
    std::vector<Rat> out(values_.size(), Rat(0));
    for (int v = 0; v < size(); v++)
        if (keep.test(v)) out[v] = values_[v];
    return VertexFunction(std::move(out));
}

VertexFunction operator+(const VertexFunction& a, const VertexFunction& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in function sum");
    std::vector<Rat> out;
    out.reserve(a.size());
    for (int v = 0; v < a.size(); v++) out.push_back(a[v] + b[v]);
    return VertexFunction(std::move(out));
}

VertexFunction operator-(const VertexFunction& a, const VertexFunction& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in function difference");
    std::vector<Rat> out;
    out.reserve(a.size());
    for (int v = 0; v < a.size(); v++) out.push_back(a[v] - b[v]);
    return VertexFunction(std::move(out));
}

VertexFunction pointwise_max(const std::vector<VertexFunction>& fs) {
    if (fs.empty()) throw std::invalid_argument("pointwise_max of empty family");
    std::vector<Rat> out(fs[0].values());
    for (std::size_t i = 1; i < fs.size(); i++) {
        if (fs[i].size() != static_cast<int>(out.size()))
            throw std::invalid_argument("size mismatch in pointwise_max");
        for (int v = 0; v < fs[i].size(); v++)
            if (fs[i][v] > out[v]) out[v] = fs[i][v];
    }
    return VertexFunction(std::move(out));
}

VertexFunction pointwise_sum(int n, const std::vector<VertexFunction>& fs) {
    std::vector<Rat> out(n, Rat(0));
    for (const auto& f : fs) {
        if (f.size() != n) throw std::invalid_argument("size mismatch in pointwise_sum");
        for (int v = 0; v < n; v++) out[v] += f[v];
    }
    return VertexFunction(std::move(out));
}

}  // namespace ucat
