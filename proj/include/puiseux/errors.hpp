#pragma once

#include <stdexcept>
#include <string>

namespace puiseux {

enum class Errc {
    usage,
    parse,
    registry_mismatch,
    not_invertible,
    not_primitive,
    not_coprime,
    bad_initial_form,
    not_y_regular,
    not_normalized,
    not_invariant,
    insufficient_truncation,
    zero_polynomial,
    unsupported_weight,
    zero_denominator,
    internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::usage: return "usage";
        case Errc::parse: return "parse";
        case Errc::registry_mismatch: return "registry_mismatch";
        case Errc::not_invertible: return "not_invertible";
        case Errc::not_primitive: return "not_primitive";
        case Errc::not_coprime: return "not_coprime";
        case Errc::bad_initial_form: return "bad_initial_form";
        case Errc::not_y_regular: return "not_y_regular";
        case Errc::not_normalized: return "not_normalized";
        case Errc::not_invariant: return "not_invariant";
        case Errc::insufficient_truncation: return "insufficient_truncation";
        case Errc::zero_polynomial: return "zero_polynomial";
        case Errc::unsupported_weight: return "unsupported_weight";
        case Errc::zero_denominator: return "zero_denominator";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace puiseux
