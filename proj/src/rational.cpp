#include "quivar/rational.hpp"

#include <algorithm>
#include <cctype>

namespace quivar {

BigInt rational_floor(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r); // always > 0
    BigInt q = num / den;                               // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

BigInt parse_bigint(std::string_view s) { // pre-validated; handles the '+' sign itself
    bool neg = s[0] == '-';
    if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text)) bad(text);
        return Rational(parse_bigint(text));
    }
    auto num_s = text.substr(0, slash);
    auto den_s = text.substr(slash + 1);
    if (!valid_integer_token(num_s) || !valid_integer_token(den_s)) bad(text);
    BigInt den = parse_bigint(den_s);
    if (den == 0) bad(text);
    return Rational(parse_bigint(num_s), den);
}

std::string rational_str(const Rational& r) {
    return r.str();
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero");
    GaussianRational c = a * b.conj();
    return {c.re / n, c.im / n};
}

GaussianRational parse_gaussian(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) bad(text);

    // split off a trailing signed term if present
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }

    auto parse_part = [&](std::string_view part, bool imaginary) -> Rational {
        if (imaginary) {
            part.remove_suffix(1); // the 'i'
            if (part.empty() || part == "+") return Rational(1);
            if (part == "-") return Rational(-1);
        }
        return parse_rational(part);
    };

    if (split == std::string::npos) {
        bool imag = s.back() == 'i';
        Rational v = parse_part(s, imag);
        return imag ? GaussianRational(Rational(0), v) : GaussianRational(v);
    }

    std::string_view first{s.data(), split};
    std::string_view second{s.data() + split, s.size() - split};
    if (second.back() != 'i') bad(text); // real part must come first
    if (first.back() == 'i') bad(text);
    return {parse_part(first, false), parse_part(second, true)};
}

std::string gaussian_str(const GaussianRational& z) {
    if (z.im == 0) return rational_str(z.re);
    std::string imag = rational_str(z.im) + "i";
    if (z.re == 0) return imag;
    return rational_str(z.re) + (z.im > 0 ? "+" : "") + imag;
}

} // namespace quivar
