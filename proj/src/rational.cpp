#include "ucat/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ucat {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); i++)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("not a rational: '" + text + "'");
        return Rat(mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rat(std::move(q));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::pow(unsigned exponent) const {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rat(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ucat
