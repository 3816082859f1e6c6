#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfmin/intpoly.hpp"
#include "nfmin/lattice.hpp"
#include "nfmin/measures.hpp"
#include "nfmin/search.hpp"
#include "nfmin/verify.hpp"

namespace nfmin {

enum class Format { text, json, csv };
std::optional<Format> parse_format(std::string_view name);

using Document = nlohmann::ordered_json;

inline constexpr const char* kOrderCaveat =
    "m is taken over the supplied order only; the maximal order can give a smaller value";
inline constexpr const char* kDisjointnessHypothesis =
    "relative sizes assume Q(alpha) and the auxiliary field are linearly disjoint";

// Doubles are stored rounded to `precision` significant digits.
double rounded(double x, int precision);

// Roots, signature, size profile and bound comparisons. Throws Error
// ("polynomial is reducible") for a reducible input.
Document analysis_document(const IntPoly& f, const std::optional<ExtensionSignature>& ext, int precision);

Document search_document(const SearchReport& report, int precision);

struct LatticeRequest {
  std::optional<RationalBasis> basis;
  bool brute_force_check = false;
};
Document lattice_document(const IntPoly& f, const LatticeRequest& request, int precision);

// Family member plus its structural checks.
Document family_document(Family family, int n, int precision);

Document verify_document(const std::vector<CheckRecord>& records, int precision);

// json: pretty printed; text: indented key/value lines; csv: path,value rows.
std::string render(const Document& doc, Format format);
// Column layouts for the two tabular reports.
std::string search_csv(const SearchReport& report, int precision);
std::string search_text(const SearchReport& report, int precision);
std::string verify_csv(const std::vector<CheckRecord>& records, int precision);
std::string verify_text(const std::vector<CheckRecord>& records, int precision);

}  // namespace nfmin
