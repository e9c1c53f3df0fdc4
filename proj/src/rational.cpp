#include "plab/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace plab {

Rational Rational::from_string(std::string_view s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw Error("invalid rational literal: '" + std::string(s) + "'");
    i = num_end;
    if (i < s.size()) {
        if (s[i] != '/' || digits(i + 1) != s.size() || i + 1 == s.size())
            throw Error("invalid rational literal: '" + std::string(s) + "'");
    }
    mpq_class q(std::string(s), 10);
    if (q.get_den() == 0) throw DivisionByZeroError("rational literal with zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace plab
