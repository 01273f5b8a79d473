#include "cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "syzcert/errors.hpp"
#include "syzcert/lattice.hpp"

namespace syz::cli {

namespace {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {
    if (const char* env = std::getenv("SYZ_LOG")) {
      std::string v(env);
      if (v == "error") level_ = LogLevel::Error;
      else if (v == "warn") level_ = LogLevel::Warn;
      else if (v == "info") level_ = LogLevel::Info;
      else if (v == "debug") level_ = LogLevel::Debug;
      else write(LogLevel::Warn, "ignoring unrecognized SYZ_LOG value '" + v + "'");
    }
  }

  void error(const std::string& msg) { write(LogLevel::Error, msg); }
  void info(const std::string& msg) { write(LogLevel::Info, msg); }
  void debug(const std::string& msg) { write(LogLevel::Debug, msg); }

 private:
  void write(LogLevel lvl, const std::string& msg) {
    static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
    if (lvl <= level_) err_ << "syz: " << kNames[static_cast<int>(lvl)] << ": " << msg << '\n';
  }

  std::ostream& err_;
  LogLevel level_ = LogLevel::Warn;
};

struct Options {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::uint64_t d_min = 0;
  std::uint64_t d_max = 0;
  std::uint64_t r = 0;
  std::uint64_t hn = 0;
  std::string disc = "0";
  std::uint64_t horizon = 10;
  std::uint64_t cap = lattice::kDefaultEnumerationCap;
  std::uint64_t genus = 0;
  std::uint64_t deg_line = 0;
  unsigned jobs = 0;
  bool json = false;
  bool csv = false;
  std::string out_file;
};

void add_format_flags(CLI::App* cmd, Options& o, bool allow_csv) {
  auto* json = cmd->add_flag("--json", o.json, "Emit a JSON report");
  if (allow_csv) {
    auto* csv = cmd->add_flag("--csv", o.csv, "Emit CSV");
    json->excludes(csv);
  }
  cmd->add_option("--out", o.out_file, "Write the report to FILE instead of standard output");
}

void add_npd(CLI::App* cmd, Options& o, bool need_p = true) {
  cmd->add_option("-n", o.n, "Dimension of projective space")->required();
  auto* p = cmd->add_option("-p", o.p, "Characteristic (prime)");
  if (need_p) p->required();
  cmd->add_option("-d", o.d, "Degree")->required();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<criteria::Certificate> sweep(std::uint64_t n, std::uint64_t p, std::uint64_t d_min,
                                         std::uint64_t d_max, unsigned jobs) {
  if (d_min < 1 || d_min > d_max) throw ParameterError("sweep needs 1 <= dmin <= dmax");
  const std::size_t count = d_max - d_min + 1;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

  std::vector<std::optional<criteria::Certificate>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k] = criteria::certify_case(n, p, d_min + k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<criteria::Certificate> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Log log(err);
  Options o;
  CLI::App app{"Exact certificates for the semistability of syzygy bundles on P^n in "
               "characteristic p",
               "syz"};
  app.require_subcommand(1, 1);

  auto* classify = app.add_subcommand("classify", "Match (n, p, d) against the theorem cases");
  add_npd(classify, o);
  add_format_flags(classify, o, false);

  auto* certify = app.add_subcommand("certify", "Verify every inequality for (n, p, d)");
  add_npd(certify, o);
  add_format_flags(certify, o, false);

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on mu_max of the dual");
  add_npd(bounds, o, false);
  add_format_flags(bounds, o, false);

  auto* threshold = app.add_subcommand("threshold", "Hypersurface degree threshold scan");
  threshold->add_option("-n", o.n, "Dimension of the variety")->required();
  threshold->add_option("-r", o.r, "Rank of the sheaf")->required();
  threshold->add_option("--hn", o.hn, "H^n")->required();
  threshold->add_option("--disc", o.disc, "Delta(E) H^(n-2) as a rational 'num/den'");
  threshold->add_option("--horizon", o.horizon, "Stability window length");
  add_format_flags(threshold, o, false);

  auto* sweep_cmd = app.add_subcommand("sweep", "Certify every d in [dmin, dmax]");
  sweep_cmd->add_option("-n", o.n, "Dimension of projective space")->required();
  sweep_cmd->add_option("-p", o.p, "Characteristic (prime)")->required();
  sweep_cmd->add_option("--dmin", o.d_min, "First degree")->required();
  sweep_cmd->add_option("--dmax", o.d_max, "Last degree")->required();
  sweep_cmd->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
  add_format_flags(sweep_cmd, o, true);

  auto* support = app.add_subcommand("support", "Crude slope margins over admissible supports");
  add_npd(support, o);
  support->add_option("--cap", o.cap, "Maximum number of supports to enumerate");
  add_format_flags(support, o, true);

  auto* curve = app.add_subcommand("curve", "Syzygy bundle of a line bundle on a curve");
  curve->add_option("-g", o.genus, "Genus")->required();
  curve->add_option("--degl", o.deg_line, "Degree of the line bundle")->required();
  add_format_flags(curve, o, false);

  std::vector<std::string> argv_store{"syz"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    log.error(e.what());
    return kExitUsage;
  }

  std::string payload;
  int code = kExitOk;
  try {
    if (classify->parsed()) {
      payload = dump(classify_report(o.n, o.p, o.d));
    } else if (certify->parsed()) {
      auto cert = criteria::certify_case(o.n, o.p, o.d);
      log.info("certify: " + std::to_string(cert.obligations.size()) + " obligations, " +
               std::to_string(cert.failed_count()) + " failed");
      payload = dump(to_json(cert));
      if (!cert.verdict.is_stable()) code = kExitUnsettled;
    } else if (bounds->parsed()) {
      payload = dump(bounds_report(o.n, o.d, o.p ? &o.p : nullptr));
    } else if (threshold->parsed()) {
      criteria::ThresholdQuery q{o.n, o.r, o.hn, Rational::parse(o.disc), o.horizon};
      payload = dump(threshold_report(q, criteria::restriction_threshold(q)));
    } else if (sweep_cmd->parsed()) {
      auto certs = sweep(o.n, o.p, o.d_min, o.d_max, o.jobs);
      payload = o.json ? dump(sweep_json(certs)) : sweep_csv(certs);
      if (std::any_of(certs.begin(), certs.end(),
                      [](const auto& c) { return !c.verdict.is_stable(); }))
        code = kExitUnsettled;
    } else if (support->parsed()) {
      auto rows = explore_supports(o.n, o.p, o.d, o.cap);
      log.debug("support: " + std::to_string(rows.size()) + " supports");
      payload = o.csv ? support_csv(rows)
                      : dump(support_report(o.n, o.p, o.d, o.cap, rows,
                                            criteria::certify_case(o.n, o.p, o.d)));
    } else if (curve->parsed()) {
      payload = dump(curve_report(criteria::curve_syzygy_stats(o.genus, o.deg_line)));
    }
  } catch (const ParameterError& e) {
    log.error(e.what());
    return kExitUsage;
  } catch (const CaseNotApplicable& e) {
    log.error(e.what());
    return kExitUsage;
  } catch (const HypothesisViolation& e) {
    log.error(e.what());
    return kExitUsage;
  } catch (const EnumerationOverflow& e) {
    log.error(e.what());
    return kExitLimit;
  } catch (const ScanLimitExceeded& e) {
    log.error(e.what());
    return kExitLimit;
  } catch (const std::exception& e) {
    log.error(std::string("internal error: ") + e.what());
    return kExitInternal;
  }

  if (o.out_file.empty()) {
    out << payload;
    out.flush();
    if (!out) {
      log.error("failed writing the report");
      return kExitLimit;
    }
  } else {
    std::ofstream file(o.out_file, std::ios::binary | std::ios::trunc);
    file << payload;
    file.close();
    if (!file) {
      log.error("cannot write '" + o.out_file + "'");
      return kExitLimit;
    }
  }
  return code;
}

}  // namespace syz::cli
