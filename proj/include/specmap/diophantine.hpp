#ifndef SPECMAP_DIOPHANTINE_HPP
#define SPECMAP_DIOPHANTINE_HPP

#include <optional>
#include <string>
#include <vector>

namespace specmap {

/// All non-negative integer solutions of k_1 x_1 + ... + k_p x_p = m,
/// lexicographically sorted; complete by bounded enumeration (x_i <= m/k_i).
struct SolutionSet {
    std::vector<int> ks;
    int m = 0;
    std::vector<std::vector<int>> solutions;
    bool exists() const { return !solutions.empty(); }
};

SolutionSet allSolutions(const std::vector<int>& ks, int m);

enum class Verdict { Yes, No, Undetermined };

using SolutionFamily = std::vector<std::vector<int>>; // one solution per target j

struct Decision {
    Verdict verdict = Verdict::No;
    std::optional<SolutionFamily> witness;
    std::string note;
};

/// Top-level decision: a continuous spectrum-shrinking map exists iff
/// every target equation is solvable. Witness: lexicographically smallest
/// solution per equation.
Decision decideShrink(const std::vector<int>& ks, const std::vector<int>& ms);

/// Spectrum-preserving maps exist iff some family of solutions covers every
/// source index. Witness found greedily (deterministic), with a complete
/// coverage-mask search as fallback.
Decision decidePreserve(const std::vector<int>& ks, const std::vector<int>& ms);

/// Tri-valued: are all spectrum-shrinking maps automatically preserving?
/// "no" ships a non-covering witness family; "yes" needs the SMA hypothesis;
/// otherwise undetermined (open question for general algebras).
Decision decideAllShrinkPreserving(const std::vector<int>& ks, const std::vector<int>& ms,
                                   bool sourceIsSma);

/// Largest m not representable over coprime ks (all k_i >= 2, p >= 2).
/// DP over representability until min(ks) consecutive representables appear.
int frobeniusNumber(const std::vector<int>& ks);

/// Corollary: a continuous eigenvalue selection exists iff 1 is among the ks.
bool eigenvalueSelectionExists(const std::vector<int>& ks);

/// Membership DP table: representable[m] for m = 0..maxM.
std::vector<bool> representabilityTable(const std::vector<int>& ks, int maxM);

} // namespace specmap

#endif
