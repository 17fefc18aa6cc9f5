#pragma once

#include <stdexcept>
#include <string>

namespace homcert {

enum class errc {
    malformed_facet,
    empty_complex,
    missing_simplex,
    token_collision,
    not_a_pseudomanifold,
    not_a_cocycle,
    missing_rok,
    invalid_precondition,
    no_lift_possible,
    disconnected_complex,
    parse_error,
    bad_argument,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_facet: return "malformed-facet";
        case errc::empty_complex: return "empty-complex";
        case errc::missing_simplex: return "missing-simplex";
        case errc::token_collision: return "token-collision";
        case errc::not_a_pseudomanifold: return "not-a-pseudomanifold";
        case errc::not_a_cocycle: return "not-a-cocycle";
        case errc::missing_rok: return "missing-rok";
        case errc::invalid_precondition: return "invalid-precondition";
        case errc::no_lift_possible: return "no-lift-possible";
        case errc::disconnected_complex: return "disconnected-complex";
        case errc::parse_error: return "parse-error";
        case errc::bad_argument: return "bad-argument";
        case errc::internal: return "internal-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace homcert
