#include "bss/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace bss {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (frac == 0 || frac > 18) throw std::invalid_argument("rational: bad decimal: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac; ++i) den = checked_mul(den, 10);
        return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(text));
}

} // namespace bss
