#include "chromacode/rational.hpp"

#include "chromacode/errors.hpp"

#include <cctype>

namespace chromacode {

namespace {

boost::multiprecision::cpp_int parse_int(const std::string& s, const std::string& whole) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InvalidArgument("malformed rational '" + whole + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw InvalidArgument("malformed rational '" + whole + "'");
        }
    }
    return boost::multiprecision::cpp_int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, text));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational sum(const std::vector<Rational>& values) {
    Rational s = 0;
    for (const auto& v : values) s += v;
    return s;
}

}  // namespace chromacode
