#include "delpezzo/divisor_text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace delpezzo {

SurfaceModel parse_surface(std::string_view text) {
    if (text == "P2") return SurfaceModel::blow_up(0);
    if (text == "Q") return SurfaceModel::quadric();
    if (text.size() == 2 && text[0] == 'X' && text[1] >= '0' && text[1] <= '6') {
        return SurfaceModel::blow_up(text[1] - '0');
    }
    throw ParseError(0, "unknown surface '" + std::string(text) + "' (expected P2, X0..X6 or Q)");
}

namespace {

class DivisorParser {
public:
    DivisorParser(const SurfaceModel& surface, std::string_view text)
        : surface_(surface), text_(text), acc_(DivisorClass::zero(surface)) {}

    DivisorClass parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError(pos_, "empty divisor");
        bool first = true;
        while (pos_ < text_.size()) {
            parse_term(first);
            first = false;
            skip_space();
        }
        return acc_;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Coeff parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Coeff value = 0;
        if (std::from_chars(text_.data() + start, text_.data() + pos_, value).ec != std::errc()) {
            throw ParseError(start, "integer out of range");
        }
        return value;
    }

    void parse_term(bool first) {
        const std::size_t term_start = pos_;
        Coeff sign = 1;
        if (text_[pos_] == '+' || text_[pos_] == '-') {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_space();
        } else if (!first) {
            throw ParseError(pos_, "expected '+' or '-'");
        }
        if (pos_ == text_.size()) throw ParseError(pos_, "dangling sign");

        bool has_number = false;
        Coeff coefficient = 1;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coefficient = parse_integer();
            has_number = true;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_space();
                if (pos_ == text_.size()) throw ParseError(pos_, "expected basis symbol after '*'");
            }
        }

        if (pos_ == text_.size() || text_[pos_] == '+' || text_[pos_] == '-') {
            // A bare integer is only meaningful as the zero class.
            if (has_number && coefficient == 0) return;
            throw ParseError(term_start, "expected basis symbol");
        }

        const DivisorClass generator = parse_symbol();
        acc_ += detail::checked_mul(sign, coefficient) * generator;
    }

    DivisorClass parse_symbol() {
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (surface_.is_quadric()) {
            if (c == 'h') { ++pos_; return DivisorClass::h(surface_); }
            if (c == 'm') { ++pos_; return DivisorClass::m(surface_); }
            throw ParseError(start, "unknown symbol for the quadric (expected h or m)");
        }
        if (c == 'l') {
            ++pos_;
            return DivisorClass::l(surface_);
        }
        if (c == 'e') {
            ++pos_;
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError(pos_, "expected exceptional index after 'e'");
            }
            const Coeff index = parse_integer();
            if (index < 1 || index > surface_.points()) {
                throw ParseError(start, "e" + std::to_string(index) + " is not a generator on " + surface_.name());
            }
            return DivisorClass::e(surface_, static_cast<int>(index));
        }
        if (surface_.points() == 1) {
            if (c == 'f') {
                ++pos_;
                return from_ruled(RuledCoords{0, 1});
            }
            if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '0') {
                pos_ += 2;
                return from_ruled(RuledCoords{1, 0});
            }
        }
        throw ParseError(start, "unknown symbol '" + std::string(1, c) + "' on " + surface_.name());
    }

    const SurfaceModel& surface_;
    std::string_view text_;
    std::size_t pos_ = 0;
    DivisorClass acc_;
};

void append_term(std::ostringstream& out, Coeff c, const std::string& symbol, bool& first) {
    if (c == 0) return;
    if (c < 0) {
        out << '-';
    } else if (!first) {
        out << '+';
    }
    const Coeff mag = c < 0 ? -c : c;
    if (mag != 1) out << mag;
    out << symbol;
    first = false;
}

}  // namespace

DivisorClass parse_divisor(const SurfaceModel& surface, std::string_view text) {
    return DivisorParser(surface, text).parse();
}

std::string format_divisor(const DivisorClass& d) {
    if (d.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (d.surface().is_quadric()) {
        append_term(out, d[0], "h", first);
        append_term(out, d[1], "m", first);
    } else {
        append_term(out, d[0], "l", first);
        for (std::size_t i = 1; i < d.size(); ++i) append_term(out, d[i], "e" + std::to_string(i), first);
    }
    return out.str();
}

}  // namespace delpezzo
