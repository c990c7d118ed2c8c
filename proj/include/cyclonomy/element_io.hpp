/*
   Copyright 2026 The Cyclonomy Authors

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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclonomy/cyclo.hpp"

// Text form of field elements: comma-separated coefficients on the power
// basis, little-endian, each an integer or "a/b". "-1,1" is zeta - 1 at p = 3.

namespace cyclonomy {

inline CycRat parse_element(const FieldContext& ctx, std::string_view text)
{
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (coeffs.size() != ctx.degree())
        detail::fail(Errc::BadLength, "element must have exactly p-1 = " + std::to_string(ctx.degree()) +
                                          " coefficients, got " + std::to_string(coeffs.size()));
    return CycRat(ctx, std::move(coeffs));
}

inline CycInt parse_integral_element(const FieldContext& ctx, std::string_view text)
{
    auto out = to_integral(parse_element(ctx, text));
    if (!out)
        detail::fail(Errc::ParseError, "element must have integer coefficients: '" + std::string(text) + "'");
    return std::move(*out);
}

template <ExactCoefficient C>
std::vector<std::string> coefficient_strings(const CyclotomicElement<C>& a)
{
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& c : a.coefficients())
        out.push_back(to_string(c));
    return out;
}

template <ExactCoefficient C>
std::string format_element(const CyclotomicElement<C>& a)
{
    std::string out;
    for (const auto& s : coefficient_strings(a)) {
        if (!out.empty())
            out += ',';
        out += s;
    }
    return out;
}

template <ExactCoefficient C>
std::ostream& operator<<(std::ostream& os, const CyclotomicElement<C>& a)
{
    return os << '[' << format_element(a) << ']';
}

} // namespace cyclonomy
