#include "specmap/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "specmap/errors.hpp"

namespace specmap {

namespace {

using ordered_json = nlohmann::ordered_json;

GaussRational quadruple(const ordered_json& arr, std::size_t offset, const std::string& where) {
    for (std::size_t t = 0; t < 4; ++t)
        if (!arr[offset + t].is_number_integer())
            throw SchemaError(where + ": rational parts must be integers");
    return GaussRational::fromParts(arr[offset + 0].get<long long>(),
                                    arr[offset + 1].get<long long>(),
                                    arr[offset + 2].get<long long>(),
                                    arr[offset + 3].get<long long>());
}

ParsedInput parseStructure(const ordered_json& root) {
    if (!root.at("dim").is_number_integer())
        throw SchemaError("\"dim\" must be an integer");
    const int dim = root.at("dim").get<int>();
    if (dim < 1) throw SchemaError("\"dim\" must be positive");

    const ordered_json& junit = root.at("unit");
    if (!junit.is_array() || junit.size() != static_cast<std::size_t>(dim))
        throw SchemaError("\"unit\" must be an array of dim quadruples");
    GRVec unit(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < unit.size(); ++i) {
        if (!junit[i].is_array() || junit[i].size() != 4)
            throw SchemaError("unit entry " + std::to_string(i) +
                              " must be [re_num,re_den,im_num,im_den]");
        try {
            unit[i] = quadruple(junit[i], 0, "unit entry " + std::to_string(i));
        } catch (const std::domain_error& e) {
            throw SchemaError("unit entry " + std::to_string(i) + ": " + e.what());
        }
    }

    const ordered_json& jstruct = root.at("structure");
    if (!jstruct.is_array()) throw SchemaError("\"structure\" must be an array");
    std::vector<TensorEntry> tensor;
    for (std::size_t t = 0; t < jstruct.size(); ++t) {
        const ordered_json& e = jstruct[t];
        const std::string where = "structure entry " + std::to_string(t);
        if (!e.is_array() || e.size() != 7)
            throw SchemaError(where + " must be [i,j,k,re_num,re_den,im_num,im_den]");
        for (std::size_t q = 0; q < 3; ++q)
            if (!e[q].is_number_integer()) throw SchemaError(where + ": indices must be integers");
        const int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw SchemaError(where + ": index out of range [0," + std::to_string(dim - 1) + "]");
        try {
            tensor.emplace_back(i, j, k, quadruple(e, 3, where));
        } catch (const std::domain_error& ex) {
            throw SchemaError(where + ": " + ex.what());
        }
    }
    return {Algebra::make(dim, tensor, std::move(unit)), std::nullopt};
}

ParsedInput parseQuasiOrder(const ordered_json& root, bool reflexiveClose,
                            bool transitiveClose) {
    if (!root.at("n").is_number_integer()) throw SchemaError("\"n\" must be an integer");
    const int n = root.at("n").get<int>();
    if (n < 1) throw SchemaError("\"n\" must be positive");
    const ordered_json& jpairs = root.at("pairs");
    if (!jpairs.is_array()) throw SchemaError("\"pairs\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t t = 0; t < jpairs.size(); ++t) {
        const ordered_json& e = jpairs[t];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw SchemaError("pair " + std::to_string(t) + " must be [i,j] with integers");
        const int i = e[0].get<int>(), j = e[1].get<int>(); // 1-based on the wire
        if (i < 1 || i > n || j < 1 || j > n)
            throw SchemaError("pair " + std::to_string(t) + " out of range [1," +
                              std::to_string(n) + "]");
        pairs.emplace_back(i - 1, j - 1);
    }
    QuasiOrder rho = (reflexiveClose || transitiveClose)
                         ? QuasiOrder::closed(n, std::move(pairs), reflexiveClose,
                                              transitiveClose)
                         : QuasiOrder::make(n, std::move(pairs));
    Algebra a = smaAlgebra(rho);
    return {std::move(a), std::move(rho)};
}

ParsedInput parseMatrixBlocks(const ordered_json& root) {
    const ordered_json& jblocks = root.at("matrix_blocks");
    if (!jblocks.is_array() || jblocks.empty())
        throw SchemaError("\"matrix_blocks\" must be a non-empty array of positive integers");
    std::vector<int> blocks;
    for (std::size_t t = 0; t < jblocks.size(); ++t) {
        if (!jblocks[t].is_number_integer() || jblocks[t].get<int>() < 1)
            throw SchemaError("matrix_blocks entry " + std::to_string(t) +
                              " must be a positive integer");
        blocks.push_back(jblocks[t].get<int>());
    }
    // Block-diagonal sums are the SMAs of disjoint complete relations.
    std::vector<std::pair<int, int>> pairs;
    int off = 0;
    for (int k : blocks) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) pairs.emplace_back(off + r, off + c);
        off += k;
    }
    QuasiOrder rho = QuasiOrder::make(off, std::move(pairs));
    Algebra a = smaAlgebra(rho);
    return {std::move(a), std::move(rho)};
}

} // namespace

ParsedInput parseInputText(const std::string& text, bool reflexiveClose, bool transitiveClose) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw SchemaError("input must be a JSON object");
    const bool hasStructure = root.contains("structure");
    const bool hasPairs = root.contains("pairs");
    const bool hasBlocks = root.contains("matrix_blocks");
    if (hasStructure + hasPairs + hasBlocks != 1)
        throw SchemaError("input must contain exactly one of \"structure\", \"pairs\", "
                          "\"matrix_blocks\"");
    try {
        if (hasStructure) return parseStructure(root);
        if (hasPairs) return parseQuasiOrder(root, reflexiveClose, transitiveClose);
        return parseMatrixBlocks(root);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("input schema error: ") + e.what());
    }
}

ParsedInput parseInputFile(const std::string& path, bool reflexiveClose, bool transitiveClose) {
    return parseInputText(readFile(path), reflexiveClose, transitiveClose);
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write file: " + path);
    out << content;
}

std::string profileToJson(const WedderburnProfile& prof) {
    ordered_json root;
    root["dim"] = prof.dim;
    root["rad_dim"] = static_cast<int>(prof.radical.vectors.size());
    root["p"] = prof.p;
    root["ks"] = prof.ks;
    std::vector<int> codims;
    for (int k : prof.ks) codims.push_back(k * k);
    root["max_ideal_codims"] = codims;
    return root.dump(2) + "\n";
}

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "undetermined";
    }
}

std::string decisionToJson(const Decision& d) {
    ordered_json root;
    root["verdict"] = verdictName(d.verdict);
    if (d.witness)
        root["witness"] = *d.witness;
    else
        root["witness"] = nullptr;
    root["note"] = d.note;
    return root.dump(2) + "\n";
}

std::string reportToJson(const VerificationReport& r) {
    ordered_json root;
    root["samples"] = r.samples;
    ordered_json viols = ordered_json::array();
    for (const Violation& v : r.violations) {
        ordered_json jv;
        jv["seed"] = v.sampleSeed;
        jv["eigenvalue"] = {v.eigenvalue.real(), v.eigenvalue.imag()};
        jv["distance"] = v.distance;
        viols.push_back(std::move(jv));
    }
    root["violations"] = std::move(viols);
    root["max_defect"] = r.maxDefect;
    root["verdict"] = r.pass() ? "pass" : "fail";
    return root.dump(2) + "\n";
}

} // namespace specmap
