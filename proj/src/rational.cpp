#include "egal/rational.hpp"

#include <cctype>

namespace egal {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool parse_int(std::string_view text, Int& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) return false;
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        value = value * 10 + (text[pos] - '0');
    }
    out = negative ? -value : value;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num, den;
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        Int wholeValue = 0;
        bool negative = false;
        if (!whole.empty() && (whole == "-" || whole == "+")) {
            negative = whole == "-";
        } else if (!whole.empty()) {
            if (!parse_int(whole, wholeValue)) return std::nullopt;
            negative = whole.front() == '-';
        }
        Int fracValue = 0;
        Int scale = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            fracValue = fracValue * 10 + (c - '0');
            scale *= 10;
        }
        Int absWhole = wholeValue < 0 ? Int(-wholeValue) : wholeValue;
        Rational magnitude = Rational(absWhole) + Rational(fracValue, scale);
        return negative ? -magnitude : magnitude;
    }
    Int value;
    if (!parse_int(text, value)) return std::nullopt;
    return Rational(value);
}

}  // namespace egal
