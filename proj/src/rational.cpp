#include "unitred/rational.hpp"

#include <cctype>

#include "unitred/errors.hpp"

namespace unitred {

namespace {

std::string strip(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw InvalidInput("not an integer literal: '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rat parse_rational(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw InvalidInput("empty rational literal");
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(s));
    const Int num = parse_integer(s.substr(0, slash));
    const std::string den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') throw InvalidInput("negative denominator in '" + s + "'");
    const Int den = parse_integer(den_text);
    if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

Int floor(const Rat& v) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& v) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Int round_nearest(const Rat& v) { return floor(v + Rat(1, 2)); }

bool is_integer(const Rat& v) { return v.get_den() == 1; }

Int lcm_of_denominators(std::span<const Rat> values) {
    Int l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Int pow(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rat pow(const Rat& base, unsigned long exponent) {
    Rat r(pow(Int(base.get_num()), exponent), pow(Int(base.get_den()), exponent));
    r.canonicalize();
    return r;
}

std::vector<Rat> to_rationals(std::span<const Int> values) {
    return std::vector<Rat>(values.begin(), values.end());
}

}  // namespace unitred
