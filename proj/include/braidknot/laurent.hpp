#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidknot {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in a single named variable with arbitrary-precision
// integer coefficients. The zero polynomial carries a variable name too;
// arithmetic between different variables is an error.
class LaurentPoly {
public:
    explicit LaurentPoly(std::string variable = "z");

    static LaurentPoly zero(std::string variable);
    static LaurentPoly constant(std::string variable, BigInt value);
    static LaurentPoly monomial(std::string variable, long long exponent,
                                BigInt coefficient = 1);

    // Accepts the canonical rendering, e.g. "-q^8 + q^6 + q^2", "z^-1", "0".
    static LaurentPoly parse(const std::string& text, const std::string& variable);

    const std::string& variable() const { return variable_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(long long exponent) const;
    long long min_exponent() const;  // error on the zero polynomial
    long long max_exponent() const;  // error on the zero polynomial

    // Ascending by exponent.
    const std::map<long long, BigInt>& terms() const { return terms_; }

    // Equality compares variable name and terms only.
    bool operator==(const LaurentPoly& other) const = default;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    LaurentPoly pow(long long k) const;  // k >= 0

    // v -> v^-1 (negates every exponent).
    LaurentPoly substitute_inverse() const;

    // v -> w^(num/den): each exponent e becomes e*num/den; errors unless
    // every e*num is divisible by den. Used to change variable conventions.
    LaurentPoly rescale_exponents(long long num, long long den,
                                  std::string new_variable) const;

    // Terms in descending exponent order, e.g. "-q^8 + q^6 + q^2";
    // coefficient 1 is implicit, exponent 1 is written bare, negative
    // exponents keep their sign after '^'.
    std::string to_string() const;

private:
    void trim();

    std::string variable_;
    std::map<long long, BigInt> terms_;
};

}  // namespace braidknot
