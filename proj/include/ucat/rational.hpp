// Exact arbitrary-precision rationals, kept canonical (reduced, positive
// denominator) at all times. Backed by GMP.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ucat {

class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}               // NOLINT: implicit by design
    Rat(int n) : q_(n) {}                // NOLINT
    Rat(long num, long den);
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Parses "p", "p/q" or a decimal-free integer string. Throws
    // std::invalid_argument on malformed input or zero denominator.
    static Rat parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat pow(unsigned exponent) const;
    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    // Canonical form: "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace ucat
