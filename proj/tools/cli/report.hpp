#pragma once

// JSON and CSV encodings of the engine's results. Rationals are always the
// string "num/den"; key order is fixed so equal inputs give equal bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "syzcert/criteria.hpp"
#include "syzcert/lattice.hpp"

namespace syz::cli {

using Json = nlohmann::ordered_json;

std::string tool_version();

Json to_json(const criteria::Obligation& o);
criteria::Obligation obligation_from_json(const Json& j);

/// Keys: kind, tool_version, params, expansion{digits, valuation}, case,
/// verdict, all_hold, obligations[], notes[].
Json to_json(const criteria::Certificate& c);
/// Throws syz::ParameterError on a malformed document.
criteria::Certificate certificate_from_json(const Json& j);

Json classify_report(std::uint64_t n, std::uint64_t p, std::uint64_t d);
Json bounds_report(std::uint64_t n, std::uint64_t d, const std::uint64_t* p);
Json threshold_report(const criteria::ThresholdQuery& q, const criteria::ThresholdResult& r);
Json curve_report(const criteria::CurveStats& s);

struct SupportRow {
  lattice::SupportSet support;
  lattice::MarginResult margin;
  std::vector<std::size_t> class_sizes;  ///< |C_0| .. |C_m|
};

std::vector<SupportRow> explore_supports(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                                         std::uint64_t cap);
Json support_report(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::uint64_t cap,
                    const std::vector<SupportRow>& rows, const criteria::Certificate& cert);
std::string support_csv(const std::vector<SupportRow>& rows);

inline constexpr const char* kSweepHeader =
    "n,p,d,valuation,digits,case,verdict,n_obligations,n_failed,min_margin_note";

std::string sweep_csv(const std::vector<criteria::Certificate>& certs);
Json sweep_json(const std::vector<criteria::Certificate>& certs);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace syz::cli
