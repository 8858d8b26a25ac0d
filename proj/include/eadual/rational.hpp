// Exact rational scalar type and parsing/printing helpers.
//
// All core arithmetic is over Q; no floating point anywhere in the library.
// The backing type keeps numerator/denominator canonical (denominator > 0,
// gcd = 1) as long as every construction path canonicalizes; raw string
// construction of GMP rationals does not, so parsing must go through
// parse_rat below.

#ifndef EADUAL_RATIONAL_HPP
#define EADUAL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eadual {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q" with nonzero q; rejects anything else
// (in particular floating literals and zero denominators).
inline std::optional<Rat> try_parse_rat(const std::string& text) {
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        neg = num[0] == '-';
        num = num.substr(1);
    }
    if (!is_digits(num) || !is_digits(den)) return std::nullopt;
    Int p(num), q(den);
    if (q == 0) return std::nullopt;
    Rat r = Rat(p) / Rat(q);  // canonicalizes
    return neg ? -r : r;
}

inline Rat parse_rat(const std::string& text) {
    auto r = try_parse_rat(text);
    if (!r) throw ParseError("bad rational literal: '" + text + "'");
    return *r;
}

// "p/q", or plain "p" for integers.
inline std::string rat_to_string(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

inline int sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace eadual

#endif
