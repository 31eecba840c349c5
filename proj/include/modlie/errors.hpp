#pragma once

#include <stdexcept>
#include <string>

namespace modlie {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested operation is outside what the construction supports
/// (e.g. an envelope of an algebra with nonzero center).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A generator produced an object that failed its own validation.
struct ConstructionInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same object disagreed.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A cochain space would exceed the configured size guard.
struct SizeLimitError : std::runtime_error {
    SizeLimitError(const std::string& what, long long estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    long long estimate() const { return estimate_; }

private:
    long long estimate_;
};

/// Tri-state outcome for randomized decision procedures.
enum class Decision { no, yes, undecided };

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::no: return "false";
        case Decision::yes: return "true";
        default: return "undecided";
    }
}

}  // namespace modlie
