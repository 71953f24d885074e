#include "qm/gaussian.hpp"

namespace qm {

namespace {

[[noreturn]] void parse_error(std::string_view text) {
    throw std::invalid_argument("cannot parse Gaussian integer '" + std::string(text) + "'");
}

struct SignedToken {
    std::string value;  // sign and digits, "1" substituted when digits are absent
    bool had_digits = false;
};

SignedToken read_signed(std::string_view s, std::size_t& pos) {
    SignedToken tok;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) tok.value += s[pos++];
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) tok.value += s[pos++];
    tok.had_digits = pos != start;
    if (!tok.had_digits) tok.value += '1';
    if (tok.value.front() == '+') tok.value.erase(0, 1);
    return tok;
}

bool read_imag_unit(std::string_view s, std::size_t& pos) {
    std::size_t p = pos;
    if (p < s.size() && s[p] == '*') ++p;
    if (p < s.size() && s[p] == 'i') {
        pos = p + 1;
        return true;
    }
    return false;
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    std::size_t pos = 0;
    const SignedToken first = read_signed(text, pos);
    if (read_imag_unit(text, pos)) {
        if (pos != text.size()) parse_error(text);
        return {BigInt(0), BigInt(first.value)};
    }
    if (!first.had_digits) parse_error(text);
    const BigInt re(first.value);
    if (pos == text.size()) return {re, BigInt(0)};
    if (text[pos] != '+' && text[pos] != '-') parse_error(text);
    const SignedToken second = read_signed(text, pos);
    if (!read_imag_unit(text, pos) || pos != text.size()) parse_error(text);
    return {re, BigInt(second.value)};
}

}  // namespace qm
