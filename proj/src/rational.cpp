#include "multiassoc/rational.hpp"

#include <stdexcept>

namespace multiassoc {

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace multiassoc
