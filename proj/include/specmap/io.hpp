#ifndef SPECMAP_IO_HPP
#define SPECMAP_IO_HPP

#include <optional>
#include <string>

#include "specmap/diophantine.hpp"
#include "specmap/sma.hpp"
#include "specmap/verify.hpp"
#include "specmap/wedderburn.hpp"

namespace specmap {

/// A parsed CLI input: the algebra, plus the quasi-order certificate when the
/// input was a quasi-order or block list (enables the exact SMA pipelines).
struct ParsedInput {
    Algebra algebra;
    std::optional<QuasiOrder> quasiOrder;
};

/// Accepts exactly one of the three input kinds:
///   { "dim": n, "unit": [[re_n,re_d,im_n,im_d],...], "structure": [[i,j,k,...],...] }
///   { "n": n, "pairs": [[i,j],...] }   (1-based; diagonal required unless closed)
///   { "matrix_blocks": [k1,...] }
ParsedInput parseInputText(const std::string& text, bool reflexiveClose = false,
                           bool transitiveClose = false);
ParsedInput parseInputFile(const std::string& path, bool reflexiveClose = false,
                           bool transitiveClose = false);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

std::string profileToJson(const WedderburnProfile& prof);
std::string decisionToJson(const Decision& d);
std::string reportToJson(const VerificationReport& r);
std::string verdictName(Verdict v);

} // namespace specmap

#endif
