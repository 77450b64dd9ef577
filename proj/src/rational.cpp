#include "tg/rational.hpp"

#include "tg/error.hpp"

#include <cctype>

namespace tg {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw Error(Errc::ParseError, "empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw Error(Errc::ParseError, "rational literal '" + text + "' has no digits");

    auto slash = s.find('/');
    Rat r;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
        BigInt n(num), d(den);
        if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
        r = Rat(n, d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
            r = Rat(BigInt(s));
        } else {
            std::string ip = s.substr(0, dot);
            std::string fp = s.substr(dot + 1);
            if (ip.empty() && fp.empty())
                throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
            if (!ip.empty() && !all_digits(ip))
                throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
            if (!fp.empty() && !all_digits(fp))
                throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
            BigInt whole = ip.empty() ? BigInt(0) : BigInt(ip);
            BigInt scale = 1;
            BigInt frac = 0;
            for (char c : fp) {
                frac = frac * 10 + (c - '0');
                scale *= 10;
            }
            r = Rat(whole * scale + frac, scale);
        }
    }
    if (negative) r = -r;
    return r;
}

std::string rat_to_string(const Rat& value) {
    return value.str();
}

}  // namespace tg
