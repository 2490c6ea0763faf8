#include "specmap/mapbuilder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "specmap/errors.hpp"

namespace specmap {

namespace {

using ordered_json = nlohmann::ordered_json;

CMat exactToFloat(const ExactMatrix& m) {
    CMat f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = m.at(i, j).toComplex();
    return f;
}

long long toInt64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw SchemaError("exact map entry exceeds 64-bit range");
    return z.get_si();
}

} // namespace

SourcePipeline makeSmaPipeline(const QuasiOrder& rho, const Condensation& cond) {
    const int p = static_cast<int>(cond.blockSizes.size());
    // Sort condensation classes by block size ascending, stable in class order.
    std::vector<int> classIdx(p);
    std::iota(classIdx.begin(), classIdx.end(), 0);
    std::stable_sort(classIdx.begin(), classIdx.end(), [&](int a, int b) {
        return cond.blockSizes[a] < cond.blockSizes[b];
    });

    SourcePipeline pipe;
    pipe.sma = true;
    pipe.dimA = rho.dim();
    for (int c : classIdx) {
        const int k = cond.blockSizes[c];
        BlockReader reader;
        reader.k = k;
        reader.exact = true;
        ExactMatrix m(static_cast<std::size_t>(k) * k, rho.dim());
        for (int r = 0; r < rho.n; ++r) {
            if (cond.classOf[r] != c) continue;
            for (int s = 0; s < rho.n; ++s) {
                if (cond.classOf[s] != c) continue;
                const int col = rho.idx(r, s); // within-class pairs are always related
                m.at(static_cast<std::size_t>(cond.posInBlock[r]) * k + cond.posInBlock[s],
                     static_cast<std::size_t>(col)) = GaussRational::fromParts(1, 1, 0, 1);
            }
        }
        reader.exactMap = m;
        reader.floatMap = exactToFloat(m);
        pipe.readers.push_back(std::move(reader));
        pipe.ks.push_back(k);
    }
    return pipe;
}

SourcePipeline makeGeneralPipeline(const Algebra& a, const WedderburnProfile& prof,
                                   std::uint64_t seed, double tol) {
    SourcePipeline pipe;
    pipe.sma = false;
    pipe.dimA = a.dim();
    const CMat q = exactToFloat(prof.quotientProjection);
    for (std::size_t i = 0; i < prof.components.size(); ++i) {
        const Component& comp = prof.components[i];
        BlockReader reader;
        reader.k = comp.k;
        reader.exact = false;
        const CMat psi = splitSimpleComponent(prof.semisimple, comp, seed + i, tol);
        reader.floatMap = psi * q;
        pipe.readers.push_back(std::move(reader));
        pipe.ks.push_back(comp.k);
    }
    return pipe;
}

ShrinkMapSpec buildBlockMap(SourcePipeline source, const std::vector<int>& targets,
                            const std::vector<std::vector<int>>& family) {
    const int p = static_cast<int>(source.ks.size());
    if (family.size() != targets.size())
        throw ValidationError("family has " + std::to_string(family.size()) +
                              " solutions but there are " + std::to_string(targets.size()) +
                              " target blocks");
    ShrinkMapSpec spec;
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (static_cast<int>(family[j].size()) != p)
            throw ValidationError("solution " + std::to_string(j) + " has length " +
                                  std::to_string(family[j].size()) + ", expected " +
                                  std::to_string(p));
        long long total = 0;
        std::vector<int> order;
        for (int i = 0; i < p; ++i) {
            if (family[j][i] < 0)
                throw ValidationError("negative repetition count in solution " +
                                      std::to_string(j));
            total += static_cast<long long>(source.ks[i]) * family[j][i];
            for (int r = 0; r < family[j][i]; ++r) order.push_back(i);
        }
        if (total != targets[j])
            throw ValidationError("solution " + std::to_string(j) + " yields block size " +
                                  std::to_string(total) + ", target is " +
                                  std::to_string(targets[j]));
        spec.blockOrder.push_back(std::move(order));
    }
    spec.source = std::move(source);
    spec.targets = targets;
    spec.family = family;
    return spec;
}

std::vector<CMat> evaluateBlocks(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords) {
    if (static_cast<int>(coords.size()) != spec.source.dimA)
        throw ValidationError("element has " + std::to_string(coords.size()) +
                              " coordinates, source algebra has dimension " +
                              std::to_string(spec.source.dimA));
    std::vector<CMat> blocks;
    blocks.reserve(spec.source.readers.size());
    for (const BlockReader& reader : spec.source.readers) {
        std::vector<Cplx> flat;
        if (reader.exact && reader.exactMap) {
            flat = reader.exactMap->applyF(coords);
        } else {
            CVec v(coords.size());
            for (std::size_t i = 0; i < coords.size(); ++i) v(i) = coords[i];
            CVec out = reader.floatMap * v;
            flat.assign(out.data(), out.data() + out.size());
        }
        CMat x(reader.k, reader.k);
        for (int r = 0; r < reader.k; ++r)
            for (int c = 0; c < reader.k; ++c) x(r, c) = flat[static_cast<std::size_t>(r) * reader.k + c];
        blocks.push_back(std::move(x));
    }
    return blocks;
}

CMat evaluateTarget(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords, int j) {
    if (j < 0 || j >= static_cast<int>(spec.targets.size()))
        throw ValidationError("target index out of range");
    const std::vector<CMat> blocks = evaluateBlocks(spec, coords);
    CMat out = CMat::Zero(spec.targets[j], spec.targets[j]);
    int off = 0;
    for (int i : spec.blockOrder[j]) {
        const int k = spec.source.ks[i];
        out.block(off, off, k, k) = blocks[i];
        off += k;
    }
    return out;
}

CMat evaluateMap(const ShrinkMapSpec& spec, const std::vector<Cplx>& coords) {
    const std::vector<CMat> blocks = evaluateBlocks(spec, coords);
    const int total = std::accumulate(spec.targets.begin(), spec.targets.end(), 0);
    CMat out = CMat::Zero(total, total);
    int off = 0;
    for (std::size_t j = 0; j < spec.targets.size(); ++j) {
        for (int i : spec.blockOrder[j]) {
            const int k = spec.source.ks[i];
            out.block(off, off, k, k) = blocks[i];
            off += k;
        }
    }
    return out;
}

std::string mapSpecToJson(const ShrinkMapSpec& spec) {
    ordered_json root;
    ordered_json src;
    src["sma"] = spec.source.sma;
    src["dim"] = spec.source.dimA;
    src["ks"] = spec.source.ks;
    ordered_json readers = ordered_json::array();
    for (const BlockReader& r : spec.source.readers) {
        ordered_json jr;
        jr["k"] = r.k;
        jr["exact"] = r.exact;
        if (r.exact && r.exactMap) {
            ordered_json entries = ordered_json::array();
            for (std::size_t i = 0; i < r.exactMap->rows(); ++i)
                for (std::size_t c = 0; c < r.exactMap->cols(); ++c) {
                    const GaussRational& v = r.exactMap->at(i, c);
                    if (v.isZero()) continue;
                    entries.push_back({static_cast<long long>(i), static_cast<long long>(c),
                                       toInt64(v.re.get_num()), toInt64(v.re.get_den()),
                                       toInt64(v.im.get_num()), toInt64(v.im.get_den())});
                }
            jr["entries"] = std::move(entries);
        } else {
            ordered_json data = ordered_json::array();
            for (Eigen::Index i = 0; i < r.floatMap.rows(); ++i)
                for (Eigen::Index c = 0; c < r.floatMap.cols(); ++c)
                    data.push_back({r.floatMap(i, c).real(), r.floatMap(i, c).imag()});
            jr["data"] = std::move(data);
        }
        readers.push_back(std::move(jr));
    }
    src["readers"] = std::move(readers);
    root["source"] = std::move(src);
    root["targets"] = spec.targets;
    root["family"] = spec.family;
    root["order"] = spec.blockOrder;
    return root.dump(2) + "\n";
}

ShrinkMapSpec mapSpecFromJson(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("map spec is not valid JSON: ") + e.what());
    }
    try {
        SourcePipeline pipe;
        const ordered_json& src = root.at("source");
        pipe.sma = src.at("sma").get<bool>();
        pipe.dimA = src.at("dim").get<int>();
        pipe.ks = src.at("ks").get<std::vector<int>>();
        for (const ordered_json& jr : src.at("readers")) {
            BlockReader reader;
            reader.k = jr.at("k").get<int>();
            reader.exact = jr.at("exact").get<bool>();
            const std::size_t rows = static_cast<std::size_t>(reader.k) * reader.k;
            if (reader.exact) {
                ExactMatrix m(rows, pipe.dimA);
                for (const ordered_json& e : jr.at("entries")) {
                    if (e.size() != 6) throw SchemaError("exact entry must have 6 fields");
                    const std::size_t i = e[0].get<std::size_t>();
                    const std::size_t c = e[1].get<std::size_t>();
                    if (i >= rows || c >= static_cast<std::size_t>(pipe.dimA))
                        throw SchemaError("exact entry index out of range");
                    m.at(i, c) = GaussRational::fromParts(e[2].get<long long>(),
                                                          e[3].get<long long>(),
                                                          e[4].get<long long>(),
                                                          e[5].get<long long>());
                }
                reader.exactMap = m;
                reader.floatMap = exactToFloat(m);
            } else {
                const ordered_json& data = jr.at("data");
                if (data.size() != rows * static_cast<std::size_t>(pipe.dimA))
                    throw SchemaError("float reader data has wrong length");
                reader.floatMap = CMat(rows, pipe.dimA);
                std::size_t idx = 0;
                for (std::size_t i = 0; i < rows; ++i)
                    for (int c = 0; c < pipe.dimA; ++c, ++idx)
                        reader.floatMap(i, c) =
                            Cplx(data[idx][0].get<double>(), data[idx][1].get<double>());
            }
            pipe.readers.push_back(std::move(reader));
        }
        if (pipe.readers.size() != pipe.ks.size())
            throw SchemaError("reader count does not match ks");
        const std::vector<int> targets = root.at("targets").get<std::vector<int>>();
        const auto family = root.at("family").get<std::vector<std::vector<int>>>();
        ShrinkMapSpec spec = buildBlockMap(std::move(pipe), targets, family);
        // The stored order must match the deterministic layout.
        const auto order = root.at("order").get<std::vector<std::vector<int>>>();
        if (order != spec.blockOrder) throw SchemaError("order field is inconsistent with family");
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("map spec schema error: ") + e.what());
    } catch (const ValidationError& e) {
        throw SchemaError(std::string("map spec invalid: ") + e.what());
    }
}

} // namespace specmap
