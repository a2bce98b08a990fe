#include "helly/rational.hpp"

#include "helly/errors.hpp"

#include <cctype>
#include <cstddef>

namespace helly {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (is_integer_literal(text)) return Rat(BigInt(text));

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw SchemaError("bad rational literal: " + text);
        BigInt d(den);
        if (d == 0) throw SchemaError("zero denominator in rational: " + text);
        return Rat(BigInt(num), d);
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!is_integer_literal(head)) throw SchemaError("bad rational literal: " + text);
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw SchemaError("bad rational literal: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt whole(head);
        BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
        bool negative = text[0] == '-';
        BigInt numer = whole * scale + (negative ? -frac : frac);
        return Rat(numer, scale);
    }

    throw SchemaError("bad rational literal: " + text);
}

std::string rational_to_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

BigInt floor_rat(const Rat& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);  // always > 0 in canonical form
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt ceil_rat(const Rat& value) { return -floor_rat(-value); }

double to_double(const Rat& value) { return value.convert_to<double>(); }

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

}  // namespace helly
