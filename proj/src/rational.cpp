#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace crofton {

Rat rat_from_double(double v) {
    if (!std::isfinite(v)) {
        throw DomainError("coordinate is not finite: " + std::to_string(v));
    }
    return Rat(v);  // mpq_set_d is exact
}

double rat_to_double(const Rat& v) { return v.get_d(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// digits with optional single '.', at least one digit overall
bool parse_decimal_core(std::string_view s, std::string& digits, long& scale) {
    std::string intpart, fracpart;
    size_t dot = s.find('.');
    if (dot == std::string_view::npos) {
        intpart = std::string(s);
    } else {
        intpart = std::string(s.substr(0, dot));
        fracpart = std::string(s.substr(dot + 1));
        if (fracpart.find('.') != std::string::npos) return false;
    }
    if (intpart.empty() && fracpart.empty()) return false;
    if (!intpart.empty() && !all_digits(intpart)) return false;
    if (!fracpart.empty() && !all_digits(fracpart)) return false;
    digits = intpart + fracpart;
    if (digits.empty()) return false;
    scale = -static_cast<long>(fracpart.size());
    return true;
}

Rat pow10(long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r(z);
    if (e < 0) r = 1 / r;
    return r;
}

}  // namespace

Rat rat_from_decimal(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty numeric literal");

    // "num/den" fraction form
    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        Rat num = rat_from_decimal(s.substr(0, slash));
        Rat den = rat_from_decimal(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
    }
    long exponent = 0;
    size_t epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string etext(s.substr(epos + 1));
        s = s.substr(0, epos);
        if (etext.empty()) throw ParseError("empty exponent in '" + std::string(text) + "'");
        bool eneg = false;
        size_t k = 0;
        if (etext[0] == '+' || etext[0] == '-') {
            eneg = (etext[0] == '-');
            k = 1;
        }
        if (k >= etext.size() || !all_digits(std::string_view(etext).substr(k))) {
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        }
        exponent = std::strtol(etext.c_str() + k, nullptr, 10);
        if (eneg) exponent = -exponent;
    }
    std::string digits;
    long scale = 0;
    if (!parse_decimal_core(s, digits, scale)) {
        throw ParseError("malformed numeric literal '" + std::string(text) + "'");
    }
    mpz_class mant(digits, 10);
    Rat r(mant);
    r *= pow10(exponent + scale);
    if (negative) r = -r;
    r.canonicalize();
    return r;
}

std::string rat_to_decimal_string(const Rat& v) {
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();  // > 0, coprime with num
    unsigned long twos = 0, fives = 0;
    mpz_class d = den;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        return num.get_str() + "/" + den.get_str();
    }
    unsigned long k = std::max(twos, fives);
    mpz_class scaled = abs(num);
    mpz_class five = 5, two = 2;
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 5, k - fives);
    scaled *= f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, k - twos);
    scaled *= f;
    std::string digits = scaled.get_str();
    std::string out = (sgn(num) < 0) ? "-" : "";
    if (k == 0) return out + digits;
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string intpart = digits.substr(0, digits.size() - k);
    std::string fracpart = digits.substr(digits.size() - k);
    while (!fracpart.empty() && fracpart.back() == '0') fracpart.pop_back();
    if (fracpart.empty()) return out + intpart;
    return out + intpart + "." + fracpart;
}

}  // namespace crofton
