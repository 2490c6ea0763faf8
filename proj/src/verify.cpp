#include "specmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "specmap/errors.hpp"
#include "specmap/wedderburn.hpp"

namespace specmap {

namespace {

std::uint64_t sampleSeedFor(std::uint64_t seed, int t) {
    return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
}

/// Generic element, or (for SMA sources, every other sample) a dense
/// diagonalizable conjugate.
Element drawSample(const Algebra& a, const QuasiOrder* rho, int t, std::uint64_t s) {
    if (rho != nullptr && t % 2 == 1) return sampleDiagConj(*rho, a, s).elem;
    return randomElement(a, s);
}

/// Spectrum of a source element: SMA members use their n x n matrix form
/// (inverses stay inside M_n, so the two spectra coincide); general elements
/// use the left regular representation.
std::vector<Cplx> sourceSpectrum(const Element& e, const QuasiOrder* rho, double tol) {
    if (rho != nullptr) return spectrumSet(smaToMatrix(*rho, e.xf), tol);
    return spectrum(e, tol);
}

/// Spectrum of the image: union over the source blocks the family actually
/// uses (unused blocks never appear on any diagonal).
std::vector<Cplx> imageSpectrum(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords,
                                double tol) {
    std::vector<char> used(spec.source.ks.size(), 0);
    for (const std::vector<int>& order : spec.blockOrder)
        for (int i : order) used[i] = 1;
    const std::vector<CMat> blocks = evaluateBlocks(spec, coords);
    std::vector<Cplx> all;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!used[i]) continue;
        const std::vector<Cplx> vals = spectrumSet(blocks[i], tol);
        all.insert(all.end(), vals.begin(), vals.end());
    }
    return clusterCentroids(all, tol);
}

struct SampleResult {
    std::uint64_t seed = 0;
    double defect = 0.0;
    std::vector<Violation> violations;
};

void recordDefects(const std::vector<Cplx>& from, const std::vector<Cplx>& to, double tol,
                   SampleResult& out) {
    for (Cplx z : from) {
        const double d = distToSet(z, to);
        out.defect = std::max(out.defect, d);
        if (d > tol) out.violations.push_back({out.seed, z, d});
    }
}

VerificationReport runSpectralCheck(const Algebra& a, const QuasiOrder* rho,
                                    const ShrinkMapSpec& spec, int n, double tol,
                                    std::uint64_t seed, int jobs, bool twoSided) {
    std::vector<SampleResult> results(static_cast<std::size_t>(std::max(n, 0)));
    auto runRange = [&](int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            SampleResult& r = results[static_cast<std::size_t>(t)];
            r.seed = sampleSeedFor(seed, t);
            const Element e = drawSample(a, rho, t, r.seed);
            const std::vector<Cplx> src = sourceSpectrum(e, rho, tol);
            const std::vector<Cplx> img = imageSpectrum(spec, e.xf, tol);
            recordDefects(img, src, tol, r);
            if (twoSided) recordDefects(src, img, tol, r);
        }
    };
    if (jobs <= 1 || n <= 1) {
        runRange(0, n);
    } else {
        const int workers = std::min(jobs, n);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const int lo = n * w / workers, hi = n * (w + 1) / workers;
            pool.emplace_back(runRange, lo, hi);
        }
        for (std::thread& th : pool) th.join();
    }
    VerificationReport report;
    report.samples = std::max(n, 0);
    for (const SampleResult& r : results) {
        report.maxDefect = std::max(report.maxDefect, r.defect);
        report.violations.insert(report.violations.end(), r.violations.begin(),
                                 r.violations.end());
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                  if (x.sampleSeed != y.sampleSeed) return x.sampleSeed < y.sampleSeed;
                  if (x.eigenvalue.real() != y.eigenvalue.real())
                      return x.eigenvalue.real() < y.eigenvalue.real();
                  return x.eigenvalue.imag() < y.eigenvalue.imag();
              });
    return report;
}

} // namespace

VerificationReport checkShrinking(const Algebra& a, const QuasiOrder* rho,
                                  const ShrinkMapSpec& spec, int n, double tol,
                                  std::uint64_t seed, int jobs) {
    return runSpectralCheck(a, rho, spec, n, tol, seed, jobs, false);
}

VerificationReport checkPreserving(const Algebra& a, const QuasiOrder* rho,
                                   const ShrinkMapSpec& spec, int n, double tol,
                                   std::uint64_t seed, int jobs) {
    return runSpectralCheck(a, rho, spec, n, tol, seed, jobs, true);
}

VerificationReport checkQuotientLemma(const Algebra& a, int n, double tol,
                                      std::uint64_t seed) {
    const std::vector<GRVec> rad = radicalBasis(a);
    VerificationReport report;
    report.samples = std::max(n, 0);
    if (rad.empty()) {
        // Semisimple: the quotient map is the identity and distances vanish.
        return report;
    }
    const Quotient q = quotientAlgebra(a, rad, false);
    for (int t = 0; t < n; ++t) {
        const std::uint64_t s = sampleSeedFor(seed, t);
        const Element e = randomElement(a, s);
        const std::vector<Cplx> spA = spectrum(e, tol);
        const Element eBar = floatElement(q.algebra, q.projection.applyF(e.xf));
        const std::vector<Cplx> spQ = spectrum(eBar, tol);
        SampleResult r;
        r.seed = s;
        recordDefects(spA, spQ, tol, r);
        recordDefects(spQ, spA, tol, r);
        report.maxDefect = std::max(report.maxDefect, r.defect);
        report.violations.insert(report.violations.end(), r.violations.begin(),
                                 r.violations.end());
    }
    return report;
}

ExponentProfile exponentProfile(const QuasiOrder& rho, const Condensation& cond,
                                const ShrinkMapSpec& spec, int trials,
                                std::uint64_t seed) {
    (void)cond;
    if (!spec.source.sma) throw ValidationError("exponent profile requires an SMA source");
    if (trials < 1) throw ValidationError("exponent profile needs at least one trial");
    const Algebra a = smaAlgebra(rho);
    ExponentProfile profile;
    for (int t = 0; t < trials; ++t) {
        const DiagConjSample sample = sampleDiagConj(rho, a, sampleSeedFor(seed, t));
        std::vector<std::vector<int>> exps;
        for (std::size_t j = 0; j < spec.targets.size(); ++j) {
            const CMat img = evaluateTarget(spec, sample.elem.xf, static_cast<int>(j));
            std::vector<int> counts(static_cast<std::size_t>(rho.n), 0);
            for (Cplx mu : eigenvalueMultiset(img)) {
                int best = -1;
                double bestDist = 1e300;
                for (int r = 0; r < rho.n; ++r) {
                    const double d = std::abs(mu - sample.diag[static_cast<std::size_t>(r)]);
                    if (d < bestDist) {
                        bestDist = d;
                        best = r;
                    }
                }
                if (bestDist > 0.25)
                    throw NumericError("image eigenvalue " + std::to_string(mu.real()) + "+" +
                                       std::to_string(mu.imag()) +
                                       "i is not within 0.25 of any probe value");
                ++counts[static_cast<std::size_t>(best)];
            }
            exps.push_back(std::move(counts));
        }
        if (t == 0) {
            profile.exponents = std::move(exps);
        } else if (exps != profile.exponents) {
            throw NumericError("exponent profile is not invariant across trials");
        }
    }
    return profile;
}

} // namespace specmap
