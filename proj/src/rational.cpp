#include "dgsched/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dgsched {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational rational_from_string(std::string_view text)
{
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational literal");

    std::string body(text);
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    if (body.empty())
        throw std::invalid_argument("sign without digits in rational literal");

    auto slash = body.find('/');
    Rational result;
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction: " + std::string(text));
        mpz_class n(num), d(den);
        if (d == 0)
            throw std::invalid_argument("zero denominator: " + std::string(text));
        result = Rational(n, d);
        result.canonicalize();
    } else {
        auto dot = body.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(body))
                throw std::invalid_argument("malformed integer: " + std::string(text));
            result = Rational(mpz_class(body));
        } else {
            std::string whole = body.substr(0, dot);
            std::string frac = body.substr(dot + 1);
            if (whole.empty())
                whole = "0";
            if (frac.empty() || !all_digits(whole) || !all_digits(frac))
                throw std::invalid_argument("malformed decimal: " + std::string(text));
            mpz_class scale = 1;
            for (size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            mpz_class n = mpz_class(whole) * scale + mpz_class(frac);
            result = Rational(n, scale);
            result.canonicalize();
        }
    }
    if (negative)
        result = -result;
    return result;
}

std::string fraction_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<std::string> decimal_string(const Rational& value)
{
    mpz_class den = value.get_den();
    int twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
        ++fives;
    }
    if (den != 1)
        return std::nullopt;

    int digits = std::max(twos, fives);
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    mpz_class scaled = value.get_num() * (scale / value.get_den());

    bool negative = scaled < 0;
    mpz_class magnitude = negative ? mpz_class(-scaled) : scaled;
    std::string s = magnitude.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        // strip trailing zeros in the fractional part
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    return (negative ? "-" : "") + s;
}

std::string compact_string(const Rational& value)
{
    if (auto d = decimal_string(value))
        return *d;
    return fraction_string(value);
}

std::string fixed_decimal_string(const Rational& value, int digits)
{
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    mpz_class num = value.get_num() * scale;
    mpz_class den = value.get_den();
    bool negative = num < 0;
    if (negative)
        num = -num;
    // round half away from zero
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den)
        q += 1;
    std::string s = q.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return (negative && q != 0) ? "-" + s : s;
}

mpz_class floor_to_int(const Rational& value)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

mpz_class ceil_to_int(const Rational& value)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

} // namespace dgsched
