#include "braidknot/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace braidknot {

namespace {

void check_same_variable(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.variable() != b.variable()) {
        throw std::invalid_argument("variable mismatch: '" + a.variable() +
                                    "' vs '" + b.variable() + "'");
    }
}

}  // namespace

LaurentPoly::LaurentPoly(std::string variable) : variable_(std::move(variable)) {
    if (variable_.empty()) {
        throw std::invalid_argument("polynomial variable name must be nonempty");
    }
}

LaurentPoly LaurentPoly::zero(std::string variable) {
    return LaurentPoly(std::move(variable));
}

LaurentPoly LaurentPoly::constant(std::string variable, BigInt value) {
    return monomial(std::move(variable), 0, std::move(value));
}

LaurentPoly LaurentPoly::monomial(std::string variable, long long exponent,
                                  BigInt coefficient) {
    LaurentPoly p(std::move(variable));
    if (coefficient != 0) p.terms_[exponent] = std::move(coefficient);
    return p;
}

BigInt LaurentPoly::coefficient(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no exponents");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::trim() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    check_same_variable(*this, other);
    for (const auto& [e, c] : other.terms_) terms_[e] += c;
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    check_same_variable(*this, other);
    for (const auto& [e, c] : other.terms_) terms_[e] -= c;
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly result = *this;
    result += other;
    return result;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly result = *this;
    result -= other;
    return result;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    check_same_variable(*this, other);
    LaurentPoly result(variable_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            result.terms_[e1 + e2] += c1 * c2;
        }
    }
    result.trim();
    return result;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly result(variable_);
    for (const auto& [e, c] : terms_) result.terms_[e] = -c;
    return result;
}

LaurentPoly LaurentPoly::pow(long long k) const {
    if (k < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPoly acc = constant(variable_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly result(variable_);
    for (const auto& [e, c] : terms_) result.terms_[-e] = c;
    return result;
}

LaurentPoly LaurentPoly::rescale_exponents(long long num, long long den,
                                           std::string new_variable) const {
    if (den == 0) throw std::invalid_argument("zero denominator in exponent rescale");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    LaurentPoly result(std::move(new_variable));
    for (const auto& [e, c] : terms_) {
        const long long scaled = e * num;
        if (scaled % den != 0) {
            throw std::invalid_argument("exponent " + std::to_string(e) +
                                        " does not rescale by " + std::to_string(num) +
                                        "/" + std::to_string(den) +
                                        " to an integer exponent");
        }
        result.terms_[scaled / den] += c;
    }
    result.trim();
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const long long e = it->first;
        const BigInt& c = it->second;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt mag = negative ? BigInt(-c) : c;
        if (mag != 1 || e == 0) out += mag.str();
        if (e != 0) {
            out += variable_;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text, const std::string& variable) {
    LaurentPoly result(variable);
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad polynomial '" + text + "': " + why);
    };

    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_integer = [&](bool allow_sign) -> BigInt {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits_from = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_from) fail("expected digits at offset " + std::to_string(start));
        return BigInt(text.substr(start, pos - start));
    };

    skip_spaces();
    if (pos >= text.size()) fail("empty");

    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (text[pos] == '-') {
                sign = -1;
                ++pos;
                skip_spaces();
            }
        } else {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                fail("expected '+' or '-' at offset " + std::to_string(pos));
            }
            skip_spaces();
        }

        BigInt coeff = 1;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_integer(false);
            saw_coeff = true;
        }
        long long exponent = 0;
        if (text.compare(pos, variable.size(), variable) == 0) {
            pos += variable.size();
            exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exponent = static_cast<long long>(parse_integer(true));
            }
        } else if (!saw_coeff) {
            fail("expected a coefficient or '" + variable + "' at offset " +
                 std::to_string(pos));
        }
        result.terms_[exponent] += sign * coeff;

        skip_spaces();
        if (pos >= text.size()) break;
        first = false;
    }
    result.trim();
    return result;
}

}  // namespace braidknot
