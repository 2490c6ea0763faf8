#include "specmap/diophantine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "specmap/errors.hpp"

namespace specmap {

namespace {

void checkProfile(const std::vector<int>& ks) {
    if (ks.empty()) throw ValidationError("profile must be nonempty");
    for (int k : ks)
        if (k < 1) throw ValidationError("block sizes must be >= 1");
}

void enumerate(const std::vector<int>& ks, int rem, std::size_t i, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (i + 1 == ks.size()) {
        if (rem % ks[i] == 0) {
            cur.push_back(rem / ks[i]);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int x = 0; x * ks[i] <= rem; ++x) {
        cur.push_back(x);
        enumerate(ks, rem - x * ks[i], i + 1, cur, out);
        cur.pop_back();
    }
}

std::uint64_t supportMask(const std::vector<int>& sol) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < sol.size(); ++i)
        if (sol[i] > 0) m |= (1ULL << i);
    return m;
}

} // namespace

SolutionSet allSolutions(const std::vector<int>& ks, int m) {
    checkProfile(ks);
    if (m < 0) throw ValidationError("target must be non-negative");
    SolutionSet s{ks, m, {}};
    std::vector<int> cur;
    enumerate(ks, m, 0, cur, s.solutions);
    // recursion emits in lexicographic order already; keep the guarantee explicit
    std::sort(s.solutions.begin(), s.solutions.end());
    return s;
}

Decision decideShrink(const std::vector<int>& ks, const std::vector<int>& ms) {
    checkProfile(ks);
    checkProfile(ms);
    SolutionFamily family;
    for (int m : ms) {
        const SolutionSet s = allSolutions(ks, m);
        if (!s.exists()) {
            Decision d;
            d.verdict = Verdict::No;
            d.note = "target block " + std::to_string(m) +
                     " is not representable over the source profile";
            return d;
        }
        family.push_back(s.solutions.front());
    }
    Decision d;
    d.verdict = Verdict::Yes;
    d.witness = std::move(family);
    d.note = "every target equation has a non-negative solution";
    return d;
}

Decision decidePreserve(const std::vector<int>& ks, const std::vector<int>& ms) {
    checkProfile(ks);
    checkProfile(ms);
    const std::size_t p = ks.size();
    const std::uint64_t full = (p >= 64) ? ~0ULL : ((1ULL << p) - 1);
    std::vector<SolutionSet> sets;
    for (int m : ms) {
        sets.push_back(allSolutions(ks, m));
        if (!sets.back().exists()) {
            Decision d;
            d.verdict = Verdict::No;
            d.note = "no family exists: target block " + std::to_string(m) +
                     " is not representable";
            return d;
        }
    }
    // greedy cover: per target pick the solution adding most coverage
    SolutionFamily family;
    std::uint64_t covered = 0;
    for (const SolutionSet& s : sets) {
        const std::vector<int>* best = nullptr;
        int bestGain = -1;
        for (const auto& sol : s.solutions) {
            const int gain = std::popcount(supportMask(sol) & ~covered);
            if (gain > bestGain) {
                bestGain = gain;
                best = &sol;
            }
        }
        covered |= supportMask(*best);
        family.push_back(*best);
    }
    if (covered == full) {
        Decision d;
        d.verdict = Verdict::Yes;
        d.witness = std::move(family);
        d.note = "covering family found (greedy)";
        return d;
    }
    // complete fallback: DP over achievable coverage masks
    std::vector<std::set<std::uint64_t>> reach(sets.size() + 1);
    reach[0].insert(0);
    for (std::size_t j = 0; j < sets.size(); ++j) {
        std::set<std::uint64_t> masks;
        for (const auto& sol : sets[j].solutions) masks.insert(supportMask(sol));
        for (std::uint64_t prev : reach[j])
            for (std::uint64_t m : masks) reach[j + 1].insert(prev | m);
    }
    if (!reach[sets.size()].count(full)) {
        Decision d;
        d.verdict = Verdict::No;
        d.note = "every family of solutions misses some source index";
        return d;
    }
    // reconstruct a covering family by walking the DP backwards
    SolutionFamily fam(sets.size());
    std::uint64_t want = full;
    for (std::size_t j = sets.size(); j-- > 0;) {
        bool chosen = false;
        for (const auto& sol : sets[j].solutions) {
            const std::uint64_t m = supportMask(sol);
            for (std::uint64_t prev : reach[j]) {
                if ((prev | m) == want) {
                    fam[j] = sol;
                    want = prev;
                    chosen = true;
                    break;
                }
            }
            if (chosen) break;
        }
        if (!chosen)
            throw ValidationError("internal error: coverage DP reconstruction failed");
    }
    Decision d;
    d.verdict = Verdict::Yes;
    d.witness = std::move(fam);
    d.note = "covering family found (complete search)";
    return d;
}

Decision decideAllShrinkPreserving(const std::vector<int>& ks, const std::vector<int>& ms,
                                   bool sourceIsSma) {
    checkProfile(ks);
    checkProfile(ms);
    std::vector<SolutionSet> sets;
    for (int m : ms) sets.push_back(allSolutions(ks, m));
    if (std::any_of(sets.begin(), sets.end(),
                    [](const SolutionSet& s) { return !s.exists(); })) {
        Decision d;
        d.verdict = Verdict::Yes;
        d.note = "vacuously true: no continuous spectrum-shrinking map exists";
        return d;
    }
    // condition C: for each i some equation forces x_i > 0 in all solutions
    const std::size_t p = ks.size();
    std::vector<bool> forced(p, false);
    for (const SolutionSet& s : sets) {
        std::uint64_t common = ~0ULL;
        for (const auto& sol : s.solutions) common &= supportMask(sol);
        for (std::size_t i = 0; i < p; ++i)
            if (common & (1ULL << i)) forced[i] = true;
    }
    const auto miss = std::find(forced.begin(), forced.end(), false);
    if (miss != forced.end()) {
        const std::size_t i = static_cast<std::size_t>(miss - forced.begin());
        // witness: per equation the smallest solution avoiding index i
        SolutionFamily fam;
        for (const SolutionSet& s : sets) {
            for (const auto& sol : s.solutions)
                if (sol[i] == 0) {
                    fam.push_back(sol);
                    break;
                }
        }
        Decision d;
        d.verdict = Verdict::No;
        d.witness = std::move(fam);
        d.note = "witness family never uses source block index " + std::to_string(i + 1) +
                 "; the induced map shrinks but does not preserve spectra";
        return d;
    }
    Decision d;
    if (sourceIsSma) {
        d.verdict = Verdict::Yes;
        d.note = "every solution family covers every source index and the source is an SMA";
    } else {
        d.verdict = Verdict::Undetermined;
        d.note = "every solution family covers every source index, but the converse is only "
                 "known for SMA sources; open for general algebras";
    }
    return d;
}

std::vector<bool> representabilityTable(const std::vector<int>& ks, int maxM) {
    checkProfile(ks);
    std::vector<bool> rep(static_cast<std::size_t>(maxM) + 1, false);
    rep[0] = true;
    for (int m = 1; m <= maxM; ++m)
        for (int k : ks)
            if (m >= k && rep[m - k]) {
                rep[m] = true;
                break;
            }
    return rep;
}

int frobeniusNumber(const std::vector<int>& ks) {
    checkProfile(ks);
    if (ks.size() < 2) throw ValidationError("Frobenius number needs p >= 2");
    for (int k : ks)
        if (k == 1) throw ValidationError("no Frobenius number, 1 is among the block sizes");
    int g = 0;
    for (int k : ks) g = std::gcd(g, k);
    if (g != 1) throw ValidationError("block sizes are not coprime (gcd " + std::to_string(g) + ")");
    const int kmin = *std::min_element(ks.begin(), ks.end());
    const int kmax = *std::max_element(ks.begin(), ks.end());
    // kmax^2 dominates the classical Frobenius bounds at desk scale;
    // the DP stops as soon as kmin consecutive representables appear
    const int bound = kmax * kmax + kmin + 1;
    const std::vector<bool> rep = representabilityTable(ks, bound);
    int last = -1, streak = 0;
    for (int m = 0; m < static_cast<int>(rep.size()); ++m) {
        if (rep[m]) {
            if (++streak >= kmin) break;
        } else {
            streak = 0;
            last = m;
        }
    }
    return last < 0 ? 0 : last;
}

bool eigenvalueSelectionExists(const std::vector<int>& ks) {
    checkProfile(ks);
    return std::find(ks.begin(), ks.end(), 1) != ks.end();
}

} // namespace specmap
