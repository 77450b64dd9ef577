#pragma once

#include <stdexcept>
#include <string>

namespace tg {

enum class Errc {
    ParseError,
    NotFound,
    InvalidParams,
    NameClash,
    Mismatch,
    TooLarge,
    IndifferencePresent,
    NonConvergent,
    Divergent,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "ParseError";
        case Errc::NotFound: return "NotFound";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::NameClash: return "NameClash";
        case Errc::Mismatch: return "Mismatch";
        case Errc::TooLarge: return "TooLarge";
        case Errc::IndifferencePresent: return "IndifferencePresent";
        case Errc::NonConvergent: return "NonConvergent";
        case Errc::Divergent: return "Divergent";
    }
    return "Unknown";
}

// Input-shaped errors exit with 2 at the CLI, computation failures with 3.
inline bool is_input_error(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::NotFound:
        case Errc::InvalidParams:
        case Errc::NameClash:
        case Errc::Mismatch:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace tg
