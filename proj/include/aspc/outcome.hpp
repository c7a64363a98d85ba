#ifndef ASPC_OUTCOME_HPP
#define ASPC_OUTCOME_HPP

#include <optional>
#include <string>

namespace aspc {

/// Classification of one solver run on one instance.
enum class OutcomeKind {
    CorrectWitness,
    CorrectUnsat,
    WrongWitness,
    WrongUnsat,
    Timeout,
    MemOut,
    Crash,
    MalformedOutput,
};

const char* to_string(OutcomeKind k);
std::optional<OutcomeKind> outcome_from_string(const std::string& s);

/// Only wrong answers disqualify; resource or infrastructure failures never do.
inline bool disqualifies(OutcomeKind k) {
    return k == OutcomeKind::WrongWitness || k == OutcomeKind::WrongUnsat;
}

}  // namespace aspc

#endif
