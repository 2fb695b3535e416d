#include "gaborform/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gaborform/error.hpp"

namespace gaborform {

namespace {

// Largest exponent accepted by the parsers; dense work arrays are sized by it.
constexpr std::int64_t kMaxExponent = 1 << 20;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_spaces() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t n = 1) { pos_ += n; }

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(pos_, reason); }

    // Unsigned decimal number: digits [. digits] [e[+-]digits].
    double number() {
        const std::size_t start = pos_;
        std::size_t end = pos_;
        while (end < text_.size() && is_digit(text_[end])) ++end;
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            while (end < text_.size() && is_digit(text_[end])) ++end;
        }
        if (end == start || (end == start + 1 && text_[start] == '.')) fail("expected a number");
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t e = end + 1;
            if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
            if (e < text_.size() && is_digit(text_[e])) {
                while (e < text_.size() && is_digit(text_[e])) ++e;
                end = e;
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
        if (ec != std::errc() || ptr != text_.data() + end || !std::isfinite(value)) {
            fail("number out of range");
        }
        pos_ = end;
        return value;
    }

    std::int64_t exponent() {
        skip_spaces();
        if (peek() == '-') fail("negative exponent");
        if (peek() == '+') advance();
        if (!is_digit(peek())) fail("expected an integer exponent");
        std::int64_t value = 0;
        while (is_digit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxExponent) fail("exponent too large");
            advance();
        }
        if (peek() == '.') fail("exponent must be an integer");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void reject_complex(const Cursor& cur) {
    const char c = cur.peek();
    if (c == 'i' || c == 'j' || c == 'I' || c == 'J') {
        cur.fail("complex coefficients are not supported");
    }
}

SparsePolynomial finish(std::vector<Term> terms, std::size_t end_offset) {
    try {
        return SparsePolynomial(std::move(terms));
    } catch (const std::invalid_argument&) {
        // Exponents and coefficients were validated while scanning; only
        // total cancellation such as "z - z" reaches here.
        throw ParseError(end_offset, "polynomial is identically zero");
    }
}

SparsePolynomial parse_term_list(std::string_view text) {
    Cursor cur(text);
    std::vector<Term> terms;
    for (;;) {
        cur.skip_spaces();
        double sign = 1.0;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1.0;
            cur.advance();
            cur.skip_spaces();
        }
        const double coef = sign * cur.number();
        cur.skip_spaces();
        reject_complex(cur);
        if (cur.peek() != ':') cur.fail("expected ':' between coefficient and exponent");
        cur.advance();
        const std::int64_t exp = cur.exponent();
        terms.push_back({exp, coef});
        cur.skip_spaces();
        if (cur.done()) break;
        if (cur.peek() != ',') cur.fail("expected ',' between terms");
        cur.advance();
    }
    return finish(std::move(terms), text.size());
}

SparsePolynomial parse_expression(std::string_view text) {
    Cursor cur(text);
    std::vector<Term> terms;
    bool first = true;
    for (;;) {
        cur.skip_spaces();
        if (cur.done()) {
            if (first) cur.fail("empty input");
            break;
        }
        double sign = 1.0;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1.0;
            cur.advance();
            cur.skip_spaces();
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        double coef = 1.0;
        bool have_coef = false;
        if (is_digit(cur.peek()) || cur.peek() == '.') {
            coef = cur.number();
            have_coef = true;
            cur.skip_spaces();
            reject_complex(cur);
            if (cur.peek() == '*') {
                cur.advance();
                cur.skip_spaces();
                if (cur.peek() != 'z' && cur.peek() != 'Z') cur.fail("expected 'z' after '*'");
            }
        }
        std::int64_t exp = 0;
        if (cur.peek() == 'z' || cur.peek() == 'Z') {
            cur.advance();
            exp = 1;
            cur.skip_spaces();
            if (cur.peek() == '^') {
                cur.advance();
                exp = cur.exponent();
            }
        } else if (!have_coef) {
            reject_complex(cur);
            cur.fail(cur.done() ? "unexpected end of input" : "malformed token");
        }
        terms.push_back({exp, sign * coef});
    }
    return finish(std::move(terms), text.size());
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

SparsePolynomial::SparsePolynomial(std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.exponent < 0) throw std::invalid_argument("negative exponent");
        if (!std::isfinite(t.coefficient)) throw std::invalid_argument("non-finite coefficient");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    for (std::size_t i = 0; i < terms.size();) {
        Term merged{terms[i].exponent, 0.0};
        std::size_t j = i;
        for (; j < terms.size() && terms[j].exponent == merged.exponent; ++j) {
            merged.coefficient += terms[j].coefficient;
        }
        if (merged.coefficient != 0.0) terms_.push_back(merged);
        i = j;
    }
    if (terms_.empty()) throw std::invalid_argument("polynomial is identically zero");
    shift_ = terms_.front().exponent;
    for (auto& t : terms_) t.exponent -= shift_;
}

SparsePolynomial SparsePolynomial::constant(double c) { return SparsePolynomial({{0, c}}); }

SparsePolynomial SparsePolynomial::from_dense(std::span<const double> coeffs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0.0) terms.push_back({static_cast<std::int64_t>(i), coeffs[i]});
    }
    return SparsePolynomial(std::move(terms));
}

double SparsePolynomial::l1_norm() const noexcept {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient);
    return s;
}

std::vector<double> SparsePolynomial::dense() const {
    std::vector<double> out(static_cast<std::size_t>(degree()) + 1, 0.0);
    for (const auto& t : terms_) out[static_cast<std::size_t>(t.exponent)] = t.coefficient;
    return out;
}

std::complex<double> SparsePolynomial::operator()(std::complex<double> z) const {
    // Horner over the sparse exponents, highest first.
    std::complex<double> acc = 0.0;
    std::int64_t prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::int64_t gap = prev - it->exponent;
        if (gap > 0) acc *= std::pow(z, static_cast<double>(gap));
        acc += it->coefficient;
        prev = it->exponent;
    }
    return acc;
}

double SparsePolynomial::magnitude_squared(double theta) const {
    double re = 0.0, im = 0.0;
    for (const auto& t : terms_) {
        const double phase = static_cast<double>(t.exponent) * theta;
        re += t.coefficient * std::cos(phase);
        im += t.coefficient * std::sin(phase);
    }
    return re * re + im * im;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

AutocorrSequence::AutocorrSequence(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("autocorrelation band is empty");
}

SparsePolynomial parse_polynomial(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && is_space(text[first])) ++first;
    if (first == text.size()) throw ParseError(0, "empty input");
    if (text.find(':') != std::string_view::npos) return parse_term_list(text);
    return parse_expression(text);
}

AutocorrSequence parse_band(std::string_view text) {
    Cursor cur(text);
    std::vector<double> values;
    cur.skip_spaces();
    if (cur.done()) cur.fail("empty input");
    for (;;) {
        cur.skip_spaces();
        double sign = 1.0;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.peek() == '-') sign = -1.0;
            cur.advance();
        }
        values.push_back(sign * cur.number());
        cur.skip_spaces();
        if (cur.done()) break;
        if (cur.peek() != ',') cur.fail("expected ','");
        cur.advance();
    }
    return AutocorrSequence(std::move(values));
}

std::string to_string(const SparsePolynomial& p) {
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        double c = t.coefficient;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        c = std::abs(c);
        first = false;
        if (t.exponent == 0) {
            out += format_number(c);
            continue;
        }
        if (c != 1.0) out += format_number(c);
        out += "z";
        if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
}

AutocorrSequence autocorrelation(const SparsePolynomial& p) {
    const auto& terms = p.terms();
    std::vector<double> b(static_cast<std::size_t>(p.degree()) + 1, 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i; j < terms.size(); ++j) {
            b[static_cast<std::size_t>(terms[j].exponent - terms[i].exponent)] +=
                terms[i].coefficient * terms[j].coefficient;
        }
    }
    return AutocorrSequence(std::move(b));
}

double symbol_eval(const AutocorrSequence& b, double theta) {
    const auto v = b.values();
    double s = 0.0;
    // Smallest terms first.
    for (std::size_t m = v.size() - 1; m >= 1; --m) {
        s += v[m] * std::cos(static_cast<double>(m) * theta);
    }
    return v[0] + 2.0 * s;
}

}  // namespace gaborform
