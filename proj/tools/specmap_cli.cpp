#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specmap/errors.hpp"
#include "specmap/io.hpp"

namespace {

using namespace specmap;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::uint64_t seed = 0;
    double tol = 1e-8;
    int samples = 500;
    int jobs = 1;
    bool reflexiveClose = false;
    bool transitiveClose = false;
};

void addCloseFlags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--reflexive-close", o.reflexiveClose,
                  "add missing diagonal pairs to quasi-order inputs");
    cmd->add_flag("--close", o.transitiveClose,
                  "take the transitive closure of quasi-order inputs");
}

std::vector<int> profileKs(const ParsedInput& in, const CommonOpts& o) {
    if (in.quasiOrder) {
        // SMA inputs have a combinatorial profile: condensation class sizes.
        Condensation cond = condensation(*in.quasiOrder);
        std::vector<int> ks = cond.blockSizes;
        std::sort(ks.begin(), ks.end());
        return ks;
    }
    return wedderburnProfile(in.algebra, o.seed, o.tol).ks;
}

ShrinkMapSpec constructMap(const ParsedInput& src, const std::vector<int>& targets,
                           const SolutionFamily& family, const CommonOpts& o) {
    SourcePipeline pipe;
    if (src.quasiOrder) {
        pipe = makeSmaPipeline(*src.quasiOrder, condensation(*src.quasiOrder));
    } else {
        const WedderburnProfile prof = wedderburnProfile(src.algebra, o.seed, o.tol);
        pipe = makeGeneralPipeline(src.algebra, prof, o.seed, o.tol);
    }
    return buildBlockMap(std::move(pipe), targets, family);
}

int runAnalyze(const std::string& pathA, const CommonOpts& o) {
    const ParsedInput in = parseInputFile(pathA, o.reflexiveClose, o.transitiveClose);
    const WedderburnProfile prof = wedderburnProfile(in.algebra, o.seed, o.tol);
    std::cout << profileToJson(prof);
    return 0;
}

int runDecide(const std::string& pathA, const std::string& pathB, bool preserving,
              bool allPreserving, const CommonOpts& o) {
    const ParsedInput a = parseInputFile(pathA, o.reflexiveClose, o.transitiveClose);
    const ParsedInput b = parseInputFile(pathB, o.reflexiveClose, o.transitiveClose);
    const std::vector<int> ks = profileKs(a, o);
    const std::vector<int> ms = profileKs(b, o);
    Decision d;
    if (allPreserving)
        d = decideAllShrinkPreserving(ks, ms, a.quasiOrder.has_value());
    else if (preserving)
        d = decidePreserve(ks, ms);
    else
        d = decideShrink(ks, ms);
    std::cout << decisionToJson(d);
    return 0;
}

int runConstruct(const std::string& pathA, const std::string& pathB, bool preserving,
                 const std::string& outPath, const CommonOpts& o) {
    const ParsedInput a = parseInputFile(pathA, o.reflexiveClose, o.transitiveClose);
    const ParsedInput b = parseInputFile(pathB, o.reflexiveClose, o.transitiveClose);
    const std::vector<int> ks = profileKs(a, o);
    const std::vector<int> ms = profileKs(b, o);
    const Decision d = preserving ? decidePreserve(ks, ms) : decideShrink(ks, ms);
    if (d.verdict != Verdict::Yes || !d.witness) {
        std::cerr << "no " << (preserving ? "spectrum-preserving" : "spectrum-shrinking")
                  << " map exists for these profiles\n";
        return 2;
    }
    const ShrinkMapSpec spec = constructMap(a, ms, *d.witness, o);
    const std::string json = mapSpecToJson(spec);
    if (outPath.empty())
        std::cout << json;
    else
        writeFile(outPath, json);
    return 0;
}

int runVerify(const std::string& pathA, const std::string& pathB, const std::string& mapPath,
              const CommonOpts& o) {
    const ParsedInput a = parseInputFile(pathA, o.reflexiveClose, o.transitiveClose);
    const ParsedInput b = parseInputFile(pathB, o.reflexiveClose, o.transitiveClose);
    const ShrinkMapSpec spec = mapSpecFromJson(readFile(mapPath));
    if (spec.source.dimA != a.algebra.dim())
        throw SchemaError("map spec source dimension " + std::to_string(spec.source.dimA) +
                          " does not match algebra dimension " +
                          std::to_string(a.algebra.dim()));
    std::vector<int> ms = profileKs(b, o);
    std::vector<int> targets = spec.targets;
    std::sort(targets.begin(), targets.end());
    if (targets != ms)
        throw SchemaError("map spec targets do not match the target algebra profile");
    // Covering families get the stronger two-sided check.
    std::vector<char> used(spec.source.ks.size(), 0);
    for (const std::vector<int>& sol : spec.family)
        for (std::size_t i = 0; i < sol.size(); ++i)
            if (sol[i] > 0) used[i] = 1;
    const bool covering =
        std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
    const QuasiOrder* rho = a.quasiOrder ? &*a.quasiOrder : nullptr;
    const VerificationReport report =
        covering ? checkPreserving(a.algebra, rho, spec, o.samples, o.tol, o.seed, o.jobs)
                 : checkShrinking(a.algebra, rho, spec, o.samples, o.tol, o.seed, o.jobs);
    std::cout << reportToJson(report);
    return 0;
}

int runFrobenius(const std::vector<int>& ks) {
    ordered_json root;
    root["ks"] = ks;
    root["frobenius"] = frobeniusNumber(ks);
    std::cout << root.dump(2) << "\n";
    return 0;
}

int runEigsel(const std::string& pathA, const CommonOpts& o) {
    const ParsedInput a = parseInputFile(pathA, o.reflexiveClose, o.transitiveClose);
    const std::vector<int> ks = profileKs(a, o);
    ordered_json root;
    root["ks"] = ks;
    root["eigenvalue_selection"] = eigenvalueSelectionExists(ks);
    std::cout << root.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wedderburn spectral profiles and spectrum-shrinking map tools"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string pathA, pathB, mapPath, outPath;
    bool preserving = false, allPreserving = false;
    std::vector<int> frobKs;

    CLI::App* analyze = app.add_subcommand("analyze", "Wedderburn profile of an algebra");
    analyze->add_option("A", pathA, "algebra JSON file")->required();
    analyze->add_option("--seed", o.seed);
    analyze->add_option("--tol", o.tol);
    addCloseFlags(analyze, o);

    CLI::App* decide = app.add_subcommand("decide", "existence of shrinking/preserving maps");
    decide->add_option("A", pathA, "source algebra JSON file")->required();
    decide->add_option("B", pathB, "target algebra JSON file")->required();
    decide->add_flag("--preserving", preserving);
    decide->add_flag("--all-preserving", allPreserving);
    decide->add_option("--seed", o.seed);
    decide->add_option("--tol", o.tol);
    addCloseFlags(decide, o);

    CLI::App* construct = app.add_subcommand("construct", "build an explicit witness map");
    construct->add_option("A", pathA, "source algebra JSON file")->required();
    construct->add_option("B", pathB, "target algebra JSON file")->required();
    construct->add_flag("--preserving", preserving);
    construct->add_option("-o,--output", outPath, "write the map spec to this file");
    construct->add_option("--seed", o.seed);
    construct->add_option("--tol", o.tol);
    addCloseFlags(construct, o);

    CLI::App* verify = app.add_subcommand("verify", "empirically verify a map spec");
    verify->add_option("A", pathA, "source algebra JSON file")->required();
    verify->add_option("B", pathB, "target algebra JSON file")->required();
    verify->add_option("map", mapPath, "map spec JSON file")->required();
    verify->add_option("--samples", o.samples);
    verify->add_option("--tol", o.tol);
    verify->add_option("--seed", o.seed);
    verify->add_option("--jobs", o.jobs);
    addCloseFlags(verify, o);

    CLI::App* frob = app.add_subcommand("frobenius", "largest non-representable integer");
    frob->add_option("ks", frobKs, "block sizes")->required()->expected(-2);

    CLI::App* eigsel = app.add_subcommand("eigsel", "continuous eigenvalue selection");
    eigsel->add_option("A", pathA, "algebra JSON file")->required();
    eigsel->add_option("--seed", o.seed);
    eigsel->add_option("--tol", o.tol);
    addCloseFlags(eigsel, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return runAnalyze(pathA, o);
        if (decide->parsed()) return runDecide(pathA, pathB, preserving, allPreserving, o);
        if (construct->parsed()) return runConstruct(pathA, pathB, preserving, outPath, o);
        if (verify->parsed()) return runVerify(pathA, pathB, mapPath, o);
        if (frob->parsed()) return runFrobenius(frobKs);
        if (eigsel->parsed()) return runEigsel(pathA, o);
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
