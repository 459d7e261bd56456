#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seifert_cs/errors.hpp"
#include "seifert_cs/seifert.hpp"

namespace seifert_cs {

namespace detail {

class SeifertParser {
public:
    explicit SeifertParser(std::string_view text) : text_(text) {}

    SeifertData parse() {
        long long genus = 0;
        skip_ws();
        if (peek() == 'g') {
            expect('g');
            expect('=');
            genus = to_longlong(integer(), "genus");
            expect(';');
        }
        expect('n');
        expect('=');
        Int n = integer();
        skip_ws();
        if (peek() == ';') expect(';');
        std::vector<FiberPair> pairs;
        skip_ws();
        while (peek() == '(') {
            expect('(');
            Int alpha = integer();
            expect(',');
            Int beta = integer();
            expect(')');
            pairs.push_back({std::move(alpha), std::move(beta)});
            skip_ws();
        }
        if (pos_ != text_.size())
            throw ParseError(pos_, "'(' or end of input");
        return SeifertData::validate(genus, std::move(n), std::move(pairs));
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("'") + c + "'");
        ++pos_;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0)
            throw ParseError(start, "integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    long long to_longlong(const Int& v, const std::string& what) {
        if (v < -(Int(1) << 62) || v > (Int(1) << 62))
            throw ParseError(pos_, what + " in machine range");
        return static_cast<long long>(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Grammar: "[g=<int>;] n=<int> [;] (a1,b1) (a2,b2) ...", whitespace-insensitive.
inline SeifertData parse_seifert(std::string_view text) {
    return detail::SeifertParser(text).parse();
}

// Canonical renderer; parse_seifert(render_seifert(sd)) == sd.
inline std::string render_seifert(const SeifertData& sd) {
    std::string out = "g=" + std::to_string(sd.genus()) + "; n=" + sd.n().str();
    if (!sd.pairs().empty()) {
        out += ";";
        for (const auto& p : sd.pairs())
            out += " (" + p.alpha.str() + "," + p.beta.str() + ")";
    }
    return out;
}

} // namespace seifert_cs
