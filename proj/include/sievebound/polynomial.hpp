#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sievebound/errors.hpp"

namespace sievebound {

// Univariate integer polynomial, coefficients in ascending degree order.
// The leading coefficient must be positive and the degree at least 1.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.size() < 2)
            throw std::invalid_argument("IntPolynomial: degree must be at least 1");
        if (coeffs_.back() <= 0)
            throw std::invalid_argument("IntPolynomial: leading coefficient must be positive");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    const mpz_class& leading() const { return coeffs_.back(); }
    const mpz_class& constant_term() const { return coeffs_.front(); }

    // Horner evaluation, exact.
    mpz_class operator()(const mpz_class& n) const {
        mpz_class acc = coeffs_.back();
        for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * n + coeffs_[i];
        return acc;
    }

    // gcd of all coefficients (positive).
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }

    std::string to_string() const {
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const mpz_class& c = coeffs_[static_cast<size_t>(d)];
            if (c == 0) continue;
            mpz_class a = abs(c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? "-" : "+";
            }
            if (d == 0 || a != 1) out += a.get_str();
            if (d > 0) {
                if (a != 1) out += "*";
                out += "x";
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        if (out.empty()) out = "0";
        return out;
    }

private:
    std::vector<mpz_class> coeffs_;
};

namespace detail {

class PolyScanner {
public:
    explicit PolyScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start)
            throw ParseError("polynomial: expected an integer at position " + std::to_string(start));
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
};

// factor := integer ['x' ['^' integer]] | 'x' ['^' integer]
inline void parse_factor(PolyScanner& sc, mpz_class& coeff, unsigned long& deg) {
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff *= sc.integer();
        if (sc.peek() != 'x') return;  // bare integer; implicit x may follow
    }
    if (!sc.consume('x')) throw ParseError("polynomial: expected 'x' or an integer");
    unsigned long e = 1;
    if (sc.consume('^')) {
        mpz_class ez = sc.integer();
        if (!ez.fits_ulong_p()) throw ParseError("polynomial: exponent too large");
        e = ez.get_ui();
    }
    deg += e;
}

}  // namespace detail

// Accepts either a comma-separated ascending coefficient list ("2,0,0,1")
// or an expression with integer coefficients, the variable x and operators
// + - * ^ ("x^3+2", "2*x^4-3*x+7").
inline IntPolynomial parse_polynomial(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<mpz_class> coeffs;
        size_t start = 0;
        while (true) {
            const size_t comma = text.find(',', start);
            std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                             : comma - start);
            const size_t a = item.find_first_not_of(" \t");
            const size_t b = item.find_last_not_of(" \t");
            if (a == std::string::npos) throw ParseError("polynomial: empty coefficient");
            item = item.substr(a, b - a + 1);
            try {
                coeffs.emplace_back(item, 10);
            } catch (const std::invalid_argument&) {
                throw ParseError("polynomial: bad coefficient '" + item + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        try {
            return IntPolynomial(std::move(coeffs));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

    detail::PolyScanner sc(text);
    std::map<unsigned long, mpz_class> terms;
    bool first = true;
    while (!sc.eof()) {
        mpz_class sign = 1;
        if (sc.consume('-')) {
            sign = -1;
        } else if (sc.consume('+')) {
            if (first) throw ParseError("polynomial: unexpected leading '+'");
        } else if (!first) {
            throw ParseError("polynomial: expected '+' or '-' between terms");
        }
        first = false;
        mpz_class coeff = sign;
        unsigned long deg = 0;
        detail::parse_factor(sc, coeff, deg);
        while (sc.consume('*')) detail::parse_factor(sc, coeff, deg);
        terms[deg] += coeff;
    }
    if (first) throw ParseError("polynomial: empty input");
    std::vector<mpz_class> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, mpz_class(0));
    for (const auto& [d, c] : terms) coeffs[d] = c;
    try {
        return IntPolynomial(std::move(coeffs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace sievebound
