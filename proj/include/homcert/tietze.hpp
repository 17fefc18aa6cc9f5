#pragma once

#include <string>
#include <vector>

#include "homcert/presentation.hpp"

namespace homcert {

/// Greedy Tietze simplification: generator eliminations through relators
/// with a single occurrence, relator-against-relator shortening, bounded by
/// a move budget and a total-length cap.
struct TietzeOutcome {
    bool trivialized = false;  // no generators and no relators remain
    GroupPresentation simplified;
    /// Map of the simplified presentation's generator ids back to the
    /// original numbering (simplified generator i was original generator
    /// surviving_generators[i]).
    std::vector<int> surviving_generators;
    /// Each original generator as a word in the simplified generators.
    std::vector<std::vector<int>> original_in_simplified;
    std::vector<std::string> transcript;
    int moves_used = 0;
};

TietzeOutcome tietze_simplify(const GroupPresentation& p, int move_budget);

/// Replay check for a Yes verdict: rerunning the deterministic simplifier
/// under the same budget must reproduce the transcript and reach the empty
/// presentation.
bool verify_trivialization(const GroupPresentation& p, const std::vector<std::string>& transcript,
                           int move_budget);

}  // namespace homcert
