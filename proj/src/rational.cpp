#include "tori/rational.hpp"
#include "tori/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace tori {

namespace {

Rat parse_decimal(const std::string& s) {
    // [-+]? digits [. digits] [eE [-+]? digits]
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
        seen_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    long exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            eneg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("bad number: '" + s + "'");
        long e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            e = e * 10 + (s[pos++] - '0');
            if (e > 100000) throw ParseError("exponent too large: '" + s + "'");
        }
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || pos != s.size()) throw ParseError("bad number: '" + s + "'");
    Int num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long shift = exp10 - frac_digits;
    Rat r(num);
    if (shift > 0) {
        r *= Rat(int_pow(Int(10), static_cast<unsigned long>(shift)));
    } else if (shift < 0) {
        r /= Rat(int_pow(Int(10), static_cast<unsigned long>(-shift)));
    }
    return r;
}

} // namespace

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw ParseError("bad rational: '" + s + "'");
        for (size_t i = 0; i < ns.size(); ++i)
            if (!(std::isdigit(static_cast<unsigned char>(ns[i])) || (i == 0 && (ns[i] == '-' || ns[i] == '+'))))
                throw ParseError("bad rational: '" + s + "'");
        for (char c : ds)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad rational: '" + s + "'");
        Int num(ns), den(ds);
        if (den == 0) throw ParseError("zero denominator: '" + s + "'");
        Rat r;
        mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
        mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
        r.canonicalize();
        return r;
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);
    // plain integer
    for (size_t i = 0; i < s.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && (s[i] == '-' || s[i] == '+'))))
            throw ParseError("bad integer: '" + s + "'");
    return Rat(Int(s));
}

std::string rational_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat pow2(long e) {
    Rat r;
    if (e >= 0) {
        Int n = 1;
        n <<= static_cast<unsigned long>(e);
        r = Rat(n);
    } else {
        Int d = 1;
        d <<= static_cast<unsigned long>(-e);
        mpq_set_num(r.get_mpq_t(), Int(1).get_mpz_t());
        mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
    }
    return r;
}

Rat dyadic_round(const Rat& x, long bits) {
    Int num = x.get_num();
    Int den = x.get_den();
    Int scaled = num << static_cast<unsigned long>(bits);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    Rat out;
    Int d = Int(1) << static_cast<unsigned long>(bits);
    mpq_set_num(out.get_mpq_t(), q.get_mpz_t());
    mpq_set_den(out.get_mpq_t(), d.get_mpz_t());
    out.canonicalize();
    return out;
}

Rat dyadic_ceil(const Rat& x, long bits) {
    Int num = x.get_num();
    Int den = x.get_den();
    Int scaled = num << static_cast<unsigned long>(bits);
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    Rat out;
    Int d = Int(1) << static_cast<unsigned long>(bits);
    mpq_set_num(out.get_mpq_t(), q.get_mpz_t());
    mpq_set_den(out.get_mpq_t(), d.get_mpz_t());
    out.canonicalize();
    return out;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

size_t rat_bits(const Rat& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

} // namespace tori
