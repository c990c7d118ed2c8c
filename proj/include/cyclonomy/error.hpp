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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclonomy {

/// Error codes shared by every module. The names are part of the CLI
/// contract: they are emitted verbatim in error JSON.
enum class Errc {
    NotAnOddPrime,
    ContextMismatch,
    BadLength,
    NotCoprime,
    InternalInconsistency,
    ZeroInput,
    ZeroDivisor,
    NotAUnit,
    OutOfRange,
    MinusSignCase,
    NoTorsionMatch,
    HypothesisFailed,
    ZeroIdeal,
    NotPrime,
    UnsupportedPrime,
    CertificationFailed,
    OddIndex,
    NonUniqueZero,
    NormNotOne,
    ExhaustedBasis,
    NotIntegralEta,
    ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NotAnOddPrime: return "NotAnOddPrime";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::BadLength: return "BadLength";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MinusSignCase: return "MinusSignCase";
    case Errc::NoTorsionMatch: return "NoTorsionMatch";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::OddIndex: return "OddIndex";
    case Errc::NonUniqueZero: return "NonUniqueZero";
    case Errc::NormNotOne: return "NormNotOne";
    case Errc::ExhaustedBasis: return "ExhaustedBasis";
    case Errc::NotIntegralEta: return "NotIntegralEta";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Exception carrying an Errc. `value()` holds an optional decimal payload,
/// e.g. the offending norm for NotAUnit / NormNotOne.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::string value = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code), value_(std::move(value))
    {
    }

    Errc code() const noexcept { return code_; }
    const std::string& value() const noexcept { return value_; }

private:
    Errc code_;
    std::string value_;
};

namespace detail {

[[noreturn]] inline void fail(Errc code, const std::string& message, std::string value = {})
{
    throw Error(code, message, std::move(value));
}

// Bug indicator: a mathematically impossible outcome was observed.
inline void ensure(bool condition, const std::string& what)
{
    if (!condition)
        fail(Errc::InternalInconsistency, what);
}

} // namespace detail
} // namespace cyclonomy
