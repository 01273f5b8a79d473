#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "syzcert/arith.hpp"
#include "syzcert/errors.hpp"

#ifndef SYZCERT_VERSION
#define SYZCERT_VERSION "0.0.0"
#endif

namespace syz::cli {

using criteria::Certificate;
using criteria::Obligation;

std::string tool_version() { return SYZCERT_VERSION; }

namespace {

Json expansion_json(const bundle::PadicExpansion& e) {
  return Json{{"digits", e.core.digits}, {"valuation", e.valuation}};
}

std::string verdict_string(const criteria::StabilityVerdict& v) {
  return v.is_stable() ? "stable" : "unknown";
}

Json case_json(const std::optional<criteria::Case>& c) {
  return c ? Json(std::string(criteria::to_string(*c))) : Json(nullptr);
}

Json obligations_json(const std::vector<Obligation>& obs) {
  Json arr = Json::array();
  for (const auto& o : obs) arr.push_back(to_json(o));
  return arr;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParameterError(std::string("report is missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::string min_slack(const Certificate& c) {
  if (c.obligations.empty()) return "";
  Rational best = c.obligations.front().slack();
  for (const auto& o : c.obligations) best = std::min(best, o.slack());
  return best.str();
}

std::string digits_text(const std::vector<std::uint64_t>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

Json to_json(const Obligation& o) {
  return Json{{"name", o.name},
              {"lhs", o.lhs.str()},
              {"rel", std::string(criteria::to_string(o.rel))},
              {"rhs", o.rhs.str()},
              {"holds", o.holds},
              {"context", o.context ? Json(*o.context) : Json(nullptr)}};
}

Obligation obligation_from_json(const Json& j) {
  auto rel = criteria::relation_from_string(get<std::string>(j, "rel"));
  if (!rel) throw ParameterError("unknown relation in obligation");
  std::optional<std::string> context;
  if (!field(j, "context").is_null()) context = get<std::string>(j, "context");
  Obligation o = Obligation::make(get<std::string>(j, "name"),
                                  Rational::parse(get<std::string>(j, "lhs")), *rel,
                                  Rational::parse(get<std::string>(j, "rhs")), context);
  if (o.holds != get<bool>(j, "holds"))
    throw ParameterError("obligation '" + o.name + "' has an inconsistent holds flag");
  return o;
}

Json to_json(const Certificate& c) {
  Json notes = Json::array();
  for (const auto& s : c.notes) notes.push_back(s);
  return Json{{"kind", "certify"},
              {"tool_version", tool_version()},
              {"params", {{"n", c.n}, {"p", c.p}, {"d", c.d}}},
              {"expansion", expansion_json(c.expansion)},
              {"case", case_json(c.matched_case)},
              {"verdict", verdict_string(c.verdict)},
              {"all_hold", c.all_hold},
              {"obligations", obligations_json(c.obligations)},
              {"notes", notes}};
}

Certificate certificate_from_json(const Json& j) {
  if (get<std::string>(j, "kind") != "certify") throw ParameterError("not a certificate report");
  Certificate c;
  const Json& params = field(j, "params");
  c.n = get<std::uint64_t>(params, "n");
  c.p = get<std::uint64_t>(params, "p");
  c.d = get<std::uint64_t>(params, "d");

  const Json& ex = field(j, "expansion");
  c.expansion.p = c.p;
  c.expansion.valuation = get<std::uint64_t>(ex, "valuation");
  c.expansion.core = arith::DigitVector{c.p, get<std::vector<std::uint64_t>>(ex, "digits")};
  if (c.expansion.value() != Nat(c.d))
    throw ParameterError("expansion does not reconstruct d");

  if (!field(j, "case").is_null()) {
    c.matched_case = criteria::case_from_string(get<std::string>(j, "case"));
    if (!c.matched_case) throw ParameterError("unknown case name");
  }
  for (const auto& o : field(j, "obligations")) c.obligations.push_back(obligation_from_json(o));
  c.all_hold = std::all_of(c.obligations.begin(), c.obligations.end(),
                           [](const Obligation& o) { return o.holds; });
  if (c.all_hold != get<bool>(j, "all_hold"))
    throw ParameterError("all_hold disagrees with the obligations");

  const auto verdict = get<std::string>(j, "verdict");
  if (verdict == "stable") {
    if (!c.matched_case || !c.all_hold)
      throw ParameterError("stable verdict without a matched case and passing obligations");
    c.verdict = criteria::StabilityVerdict::stable(*c.matched_case);
  } else if (verdict == "unknown") {
    if (c.matched_case && c.all_hold)
      throw ParameterError("unknown verdict although the case matched and every obligation holds");
  } else {
    throw ParameterError("unknown verdict '" + verdict + "'");
  }
  c.notes = get<std::vector<std::string>>(j, "notes");
  return c;
}

Json classify_report(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  auto v = criteria::classify(n, p, d);
  return Json{{"kind", "classify"},
              {"tool_version", tool_version()},
              {"params", {{"n", n}, {"p", p}, {"d", d}}},
              {"expansion", expansion_json(bundle::expansion(d, p))},
              {"case", case_json(v.stable_case)},
              {"verdict", verdict_string(v)}};
}

Json bounds_report(std::uint64_t n, std::uint64_t d, const std::uint64_t* p) {
  auto b = criteria::mu_max_bounds(n, d);
  Json params{{"n", n}, {"d", d}};
  if (p) params["p"] = *p;
  Json j{{"kind", "bounds"},
         {"tool_version", tool_version()},
         {"params", params},
         {"lower", b.lower.str()},
         {"upper", b.upper.str()}};
  if (p) {
    auto obs = criteria::mu_max_proof_check(n, *p, d);
    j["obligations"] = obligations_json(obs);
  }
  return j;
}

Json threshold_report(const criteria::ThresholdQuery& q, const criteria::ThresholdResult& r) {
  Json evidence = Json::array();
  for (auto [d, pass] : r.evidence) evidence.push_back(Json::array({d, pass}));
  return Json{{"kind", "threshold"},
              {"tool_version", tool_version()},
              {"params",
               {{"n", q.n}, {"r", q.r}, {"hn", q.hn}, {"disc", q.disc.str()},
                {"horizon", q.horizon}}},
              {"first_pass", r.first_pass},
              {"stable_from", r.stable_from},
              {"evidence", evidence}};
}

Json curve_report(const criteria::CurveStats& s) {
  return Json{{"kind", "curve"},
              {"tool_version", tool_version()},
              {"params", {{"g", s.genus}, {"degl", s.deg_line}}},
              {"rank", s.rank},
              {"deg_dual", s.deg_dual},
              {"slope_dual", s.slope_dual.str()}};
}

std::vector<SupportRow> explore_supports(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                                         std::uint64_t cap) {
  std::vector<SupportRow> rows;
  for (auto& s : lattice::enumerate_supports(n, p, d, cap)) {
    SupportRow row{s, lattice::crude_margin(s), {}};
    for (const auto& [j, members] : lattice::classify_support(s))
      row.class_sizes.push_back(members.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json support_report(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::uint64_t cap,
                    const std::vector<SupportRow>& rows, const Certificate& cert) {
  Json supports = Json::array();
  std::size_t conclusive = 0;
  for (const auto& row : rows) {
    conclusive += row.margin.conclusive ? 1 : 0;
    supports.push_back(Json{{"indices", row.support.indices},
                            {"margin", row.margin.margin.str()},
                            {"conclusive", row.margin.conclusive},
                            {"class_sizes", row.class_sizes}});
  }
  Json notes = Json::array();
  if (conclusive < rows.size())
    notes.push_back(
        "an inconclusive margin only means the dimension box is too coarse; "
        "it is not a destabilizing subbundle");
  return Json{{"kind", "support"},
              {"tool_version", tool_version()},
              {"params", {{"n", n}, {"p", p}, {"d", d}, {"cap", cap}}},
              {"case", case_json(cert.matched_case)},
              {"verdict", verdict_string(cert.verdict)},
              {"supports", supports},
              {"summary",
               {{"total", rows.size()},
                {"conclusive", conclusive},
                {"inconclusive", rows.size() - conclusive}}},
              {"notes", notes}};
}

std::string support_csv(const std::vector<SupportRow>& rows) {
  std::ostringstream os;
  os << "indices,margin,conclusive,class_sizes\n";
  std::size_t conclusive = 0;
  for (const auto& row : rows) {
    conclusive += row.margin.conclusive ? 1 : 0;
    std::vector<std::uint64_t> sizes(row.class_sizes.begin(), row.class_sizes.end());
    os << csv_field(digits_text(row.support.indices)) << ',' << row.margin.margin.str() << ','
       << (row.margin.conclusive ? "true" : "false") << ',' << csv_field(digits_text(sizes))
       << '\n';
  }
  os << "# conclusive=" << conclusive << " inconclusive=" << rows.size() - conclusive << '\n';
  return os.str();
}

std::string sweep_csv(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  os << kSweepHeader << '\n';
  for (const auto& c : certs) {
    std::string case_name = c.matched_case ? std::string(criteria::to_string(*c.matched_case))
                                           : std::string("none");
    os << c.n << ',' << c.p << ',' << c.d << ',' << c.expansion.valuation << ','
       << csv_field(digits_text(c.expansion.core.digits)) << ',' << case_name << ','
       << verdict_string(c.verdict) << ',' << c.obligations.size() << ',' << c.failed_count()
       << ',' << csv_field(min_slack(c)) << '\n';
  }
  return os.str();
}

Json sweep_json(const std::vector<Certificate>& certs) {
  Json rows = Json::array();
  for (const auto& c : certs) {
    rows.push_back(Json{{"d", c.d},
                        {"valuation", c.expansion.valuation},
                        {"digits", c.expansion.core.digits},
                        {"case", case_json(c.matched_case)},
                        {"verdict", verdict_string(c.verdict)},
                        {"n_obligations", c.obligations.size()},
                        {"n_failed", c.failed_count()},
                        {"min_margin_note", min_slack(c)}});
  }
  const auto& first = certs.front();
  return Json{{"kind", "sweep"},
              {"tool_version", tool_version()},
              {"params",
               {{"n", first.n}, {"p", first.p}, {"dmin", first.d}, {"dmax", certs.back().d}}},
              {"rows", rows}};
}

}  // namespace syz::cli
