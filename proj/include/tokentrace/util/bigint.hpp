/*
   Copyright 2026 The tokentrace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace tokentrace {

// Wei and raw token units stay in exact integer arithmetic end to end;
// floating point appears only in human-facing approximations.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline const bigint& wei_per_eth() {
    static const bigint v = bigint(1000000000000000000LL); // 10^18
    return v;
}

inline bigint pow10(unsigned exp) {
    bigint v = 1;
    for (unsigned i = 0; i < exp; ++i) v *= 10;
    return v;
}

/// Parses a non-negative decimal integer string ("0", "124", "98000000...").
/// Leading zeros are stripped first: the bigint constructor would read them
/// as an octal prefix.
inline std::optional<bigint> parse_uint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (c < '0' || c > '9') return std::nullopt;
    const size_t first = s.find_first_not_of('0');
    if (first == std::string_view::npos) return bigint(0);
    return bigint(std::string(s.substr(first)));
}

/// Parses a non-negative decimal number with an optional fractional part
/// ("233.64", "0.01", "7200") into an exact rational.
inline std::optional<rational> parse_decimal(std::string_view s) {
    const auto dot = s.find('.');
    const std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    bigint num = 0;
    if (!int_part.empty()) {
        const auto i = parse_uint(int_part);
        if (!i) return std::nullopt;
        num = *i;
    }
    bigint den = 1;
    if (!frac_part.empty()) {
        const auto f = parse_uint(frac_part);
        if (!f) return std::nullopt;
        den = pow10(static_cast<unsigned>(frac_part.size()));
        num = num * den + *f;
    }
    return rational(num, den);
}

/// Exact decimal ETH rendering of a wei amount: "970.8", "0.01", "12".
/// Always terminates because wei/10^18 has a power-of-ten denominator.
inline std::string format_eth(const bigint& wei) {
    const bigint whole = wei / wei_per_eth();
    bigint frac = wei % wei_per_eth();
    std::string out = whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(0, 18 - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

/// Converts a non-negative wei amount to US cents at `usd_per_eth`,
/// rounded half-up: cents = round(wei * rate * 100 / 10^18).
inline bigint usd_cents(const bigint& wei, const rational& usd_per_eth) {
    if (usd_per_eth <= 0) throw error("usd rate must be positive");
    const bigint num = wei * numerator(usd_per_eth) * 100;
    const bigint den = denominator(usd_per_eth) * wei_per_eth();
    return (num * 2 + den) / (den * 2);
}

/// "226817.71" from a cent count; two fractional digits always.
inline std::string format_usd_cents(const bigint& cents) {
    const bigint dollars = cents / 100;
    const bigint rem = cents % 100;
    std::string frac = rem.str();
    if (frac.size() < 2) frac.insert(0, 2 - frac.size(), '0');
    return dollars.str() + "." + frac;
}

/// Decimal approximation of an exact rational with up to `max_frac` digits,
/// trailing zeros trimmed. Used only for display fields next to exact ones.
inline std::string format_rational(const rational& r, unsigned max_frac = 6) {
    const bigint scale = pow10(max_frac);
    const bigint num2 = numerator(r) * scale * 2;
    const bigint den = denominator(r);
    bigint scaled = (num2 + den) / (den * 2); // half-up
    const bigint whole = scaled / scale;
    bigint frac = scaled % scale;
    std::string out = whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(0, max_frac - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

} // namespace tokentrace
