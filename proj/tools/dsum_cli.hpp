#pragma once

// Command-line front end for the dsum library. `run` is separate from main so
// tests can drive it with captured streams.
//
// Exit codes: 0 success, 1 a verified identity failed, 2 invalid input,
// 3 resource guard tripped, 4 I/O failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsum/dsum.hpp"

namespace dsum::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailed = 1,
  kInvalidInput = 2,
  kTooLarge = 3,
  kIoError = 4,
};

inline constexpr const char* kLimitEnvVar = "DSUM_ENUM_LIMIT";

enum class OutputFormat { text, json, csv };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration ceiling, overridable through DSUM_ENUM_LIMIT.
inline double enumeration_limit() {
  const char* env = std::getenv(kLimitEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) {
    throw input_error(std::string(kLimitEnvVar) + " must be a positive number, got '" + env + "'");
  }
  return v;
}

/// "%.9f"-style fixed formatting without locale influence.
inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

/// Compact scientific form: 0.0e0, 3.4e-17.
inline std::string compact_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  std::string s = buf;
  auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = exponent[0] == '-';
  exponent.erase(0, 1);
  exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
  return mantissa + "e" + (negative ? "-" : "") + exponent;
}

inline std::string coprime_text(const BigInt& a, const BigInt& b) { return a.str() + "," + b.str(); }

namespace detail {

inline void require_linear_size(const BigInt& b, double limit) {
  if (b > BigInt(static_cast<std::uint64_t>(limit))) {
    throw resource_error("instance too large: O(b) evaluation with b=" + b.str() + " exceeds the limit " +
                         fixed(limit, 0) + " (set " + kLimitEnvVar + " to raise it)");
  }
}

inline nlohmann::ordered_json report_json(const CoprimePair& p, const ReciprocityReport& r) {
  nlohmann::ordered_json j;
  j["a"] = p.a().str();
  j["b"] = p.b().str();
  j["s_ab"] = r.s_ab.to_string();
  j["s_ba"] = r.s_ba.to_string();
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["holds"] = r.holds;
  return j;
}

inline constexpr const char* kReportCsvHeader = "a,b,s_ab,s_ba,lhs,rhs,holds";

inline std::string report_csv_row(const CoprimePair& p, const ReciprocityReport& r) {
  return p.a().str() + "," + p.b().str() + "," + r.s_ab.to_string() + "," + r.s_ba.to_string() + "," +
         r.lhs.to_string() + "," + r.rhs.to_string() + "," + (r.holds ? "true" : "false");
}

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

inline Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw input_error("range must look like MIN..MAX, got '" + text + "'");
  auto lo = parse_bigint(text.substr(0, dots));
  auto hi = parse_bigint(text.substr(dots + 2));
  if (lo < 1) throw input_error("range bounds must be positive, got '" + text + "'");
  if (hi > 1'000'000'000) throw input_error("range bound too large in '" + text + "'");
  return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

}  // namespace detail

struct DedekindArgs {
  std::string a, b, method = "fast";
};

inline int cmd_dedekind(const DedekindArgs& args, OutputFormat fmt, std::ostream& out) {
  CoprimePair p(parse_bigint(args.a), parse_bigint(args.b));
  const double limit = enumeration_limit();
  std::string value;
  bool exact = true;
  double approx = 0;
  if (args.method == "fast") {
    value = dedekind_fast(p).to_string();
  } else if (args.method == "sawtooth") {
    detail::require_linear_size(p.b(), limit);
    value = dedekind_sawtooth(p).to_string();
  } else {
    detail::require_linear_size(p.b(), limit);
    approx = dedekind_cotangent(p);
    value = fixed(approx, 12);
    exact = false;
  }
  switch (fmt) {
    case OutputFormat::text:
      out << value << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["a"] = p.a().str();
      j["b"] = p.b().str();
      j["method"] = args.method;
      if (exact) {
        j["value"] = value;
      } else {
        j["value"] = approx;
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "a,b,method,value\n" << p.a() << ',' << p.b() << ',' << args.method << ',' << value << '\n';
      break;
  }
  return kOk;
}

struct PairArgs {
  std::string a, b, method = "sawtooth";
};

inline int cmd_reciprocity(const PairArgs& args, OutputFormat fmt, std::ostream& out) {
  CoprimePair p(parse_bigint(args.a), parse_bigint(args.b));
  DedekindMethod method = DedekindMethod::fast;
  if (args.method == "sawtooth") {
    const double limit = enumeration_limit();
    detail::require_linear_size(p.a(), limit);
    detail::require_linear_size(p.b(), limit);
    method = DedekindMethod::sawtooth;
  }
  ReciprocityReport r = reciprocity_check(p, method);
  switch (fmt) {
    case OutputFormat::text:
      out << "s(" << coprime_text(p.a(), p.b()) << ") = " << r.s_ab << '\n'
          << "s(" << coprime_text(p.b(), p.a()) << ") = " << r.s_ba << '\n'
          << "lhs = " << r.lhs << '\n'
          << "rhs = " << r.rhs << '\n'
          << (r.holds ? "HOLDS" : "FAILS") << '\n';
      break;
    case OutputFormat::json:
      out << detail::report_json(p, r).dump() << '\n';
      break;
    case OutputFormat::csv:
      out << detail::kReportCsvHeader << '\n' << detail::report_csv_row(p, r) << '\n';
      break;
  }
  return r.holds ? kOk : kIdentityFailed;
}

struct EhrhartArgs {
  std::vector<std::int64_t> intercepts;
  std::optional<std::int64_t> count;
  std::optional<std::int64_t> coeff;
  bool laurent = false;
  std::optional<int> truncation;
};

inline int cmd_ehrhart(const EhrhartArgs& args, OutputFormat fmt, std::ostream& out) {
  AxisSimplex s(args.intercepts);
  const double limit = enumeration_limit();
  nlohmann::ordered_json j;
  j["intercepts"] = s.intercepts();

  if (args.count) {
    std::uint64_t n = count_lattice_points(s, *args.count, limit);
    if (fmt == OutputFormat::text) out << n << '\n';
    if (fmt == OutputFormat::csv) out << "t,count\n" << *args.count << ',' << n << '\n';
    if (fmt == OutputFormat::json) {
      j["t"] = *args.count;
      j["count"] = n;
      out << j.dump() << '\n';
    }
    return kOk;
  }

  if (args.coeff && (*args.coeff < 0 || static_cast<std::size_t>(*args.coeff) > s.dimension())) {
    throw input_error("--coeff must lie in 0.." + std::to_string(s.dimension()));
  }

  if (args.laurent) {
    if (static_cast<double>(s.product()) > limit) {
      throw resource_error("instance too large: " + std::to_string(s.product()) + " series products");
    }
    std::vector<ComplexValue> coeffs = theorem_coefficients(s, args.truncation);
    std::size_t first = args.coeff ? static_cast<std::size_t>(*args.coeff) : 0;
    std::size_t last = args.coeff ? first : s.dimension();
    if (fmt == OutputFormat::csv) out << "m,re,im\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t m = first; m <= last; ++m) {
      const ComplexValue& c = coeffs[m];
      if (fmt == OutputFormat::text) {
        if (!args.coeff) out << "c_" << m << " = ";
        out << fixed(c.real(), 9) << " (im " << compact_sci(c.imag()) << ")\n";
      } else if (fmt == OutputFormat::csv) {
        out << m << ',' << fixed(c.real(), 12) << ',' << compact_sci(c.imag()) << '\n';
      } else {
        arr.push_back({{"m", m}, {"re", c.real()}, {"im", c.imag()}});
      }
    }
    if (fmt == OutputFormat::json) {
      j["laurent"] = arr;
      out << j.dump() << '\n';
    }
    return kOk;
  }

  EhrhartPolynomial poly = ehrhart_interpolate(s, limit);
  if (args.coeff) {
    Rational c = poly.coefficient(static_cast<std::size_t>(*args.coeff));
    if (fmt == OutputFormat::text) out << c << '\n';
    if (fmt == OutputFormat::csv) out << "m,coefficient\n" << *args.coeff << ',' << c << '\n';
    if (fmt == OutputFormat::json) {
      j["m"] = *args.coeff;
      j["coefficient"] = c.to_string();
      out << j.dump() << '\n';
    }
    return kOk;
  }
  switch (fmt) {
    case OutputFormat::text:
      out << poly.poly.to_string() << '\n';
      break;
    case OutputFormat::csv:
      out << "j,coefficient\n";
      for (std::size_t k = 0; k <= s.dimension(); ++k) out << k << ',' << poly.coefficient(k) << '\n';
      break;
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k <= s.dimension(); ++k) arr.push_back(poly.coefficient(k).to_string());
      j["coefficients"] = arr;
      j["polynomial"] = poly.poly.to_string();
      out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

inline int cmd_decompose(const PairArgs& args, OutputFormat fmt, std::ostream& out) {
  CoprimePair p(parse_bigint(args.a), parse_bigint(args.b));
  const double limit = enumeration_limit();
  detail::require_linear_size(p.a(), limit);
  detail::require_linear_size(p.b(), limit);
  ConstantTermDecomposition d = decompose_constant_term(p);
  switch (fmt) {
    case OutputFormat::text:
      out << "contrib_a = " << d.contrib_a << '\n'
          << "contrib_b = " << d.contrib_b << '\n'
          << "contrib_triple = " << d.contrib_triple << '\n'
          << "total = " << d.total << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["a"] = p.a().str();
      j["b"] = p.b().str();
      j["contrib_a"] = d.contrib_a.to_string();
      j["contrib_b"] = d.contrib_b.to_string();
      j["contrib_triple"] = d.contrib_triple.to_string();
      j["total"] = d.total.to_string();
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "a,b,contrib_a,contrib_b,contrib_triple,total\n"
          << p.a() << ',' << p.b() << ',' << d.contrib_a << ',' << d.contrib_b << ',' << d.contrib_triple
          << ',' << d.total << '\n';
      break;
  }
  return d.total == Rational(1) ? kOk : kIdentityFailed;
}

struct SweepArgs {
  std::string a_range, b_range, out_path;
};

/// One row per coprime (a, b), a-major then b ascending.
inline int cmd_sweep(const SweepArgs& args, OutputFormat fmt, std::ostream& out) {
  auto ar = detail::parse_range(args.a_range);
  auto br = detail::parse_range(args.b_range);
  const double limit = enumeration_limit();
  detail::require_linear_size(std::max(ar.hi, br.hi), limit);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out_path.empty()) {
    file.open(args.out_path, std::ios::out | std::ios::trunc);
    if (!file) throw IoFailure("cannot open '" + args.out_path + "' for writing");
    sink = &file;
  }

  std::size_t rows = 0, failures = 0;
  auto arr = nlohmann::ordered_json::array();
  if (fmt != OutputFormat::json) *sink << detail::kReportCsvHeader << '\n';
  for (std::int64_t a = ar.lo; a <= ar.hi; ++a) {
    for (std::int64_t b = br.lo; b <= br.hi; ++b) {
      if (gcd(a, b) != 1) continue;
      CoprimePair p(a, b);
      ReciprocityReport r = reciprocity_check(p);
      ++rows;
      if (!r.holds) ++failures;
      if (fmt == OutputFormat::json) {
        arr.push_back(detail::report_json(p, r));
      } else {
        *sink << detail::report_csv_row(p, r) << '\n';
      }
    }
  }
  if (fmt == OutputFormat::json) *sink << arr.dump() << '\n';
  sink->flush();
  if (!*sink) throw IoFailure("write to '" + args.out_path + "' failed");
  if (!args.out_path.empty()) {
    out << rows << " pairs, " << failures << " failures, written to " << args.out_path << '\n';
  }
  return failures == 0 ? kOk : kIdentityFailed;
}

/// Parses argv and dispatches. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dedekind sums, Ehrhart polynomials of axis simplices, and the coth-product formula"};
  app.require_subcommand(1);

  struct FormatFlags {
    bool json = false;
    bool csv = false;
    OutputFormat get() const { return json ? OutputFormat::json : csv ? OutputFormat::csv : OutputFormat::text; }
  };
  auto add_format = [](CLI::App* sub, FormatFlags& f) {
    auto* j = sub->add_flag("--json", f.json, "JSON output");
    auto* c = sub->add_flag("--csv", f.csv, "CSV output");
    j->excludes(c);
  };

  DedekindArgs ded;
  FormatFlags ded_fmt;
  auto* ded_cmd = app.add_subcommand("dedekind", "Dedekind sum s(a,b)");
  ded_cmd->add_option("a", ded.a)->required();
  ded_cmd->add_option("b", ded.b)->required();
  ded_cmd->add_option("--method", ded.method, "sawtooth | cotangent | fast")
      ->check(CLI::IsMember({"sawtooth", "cotangent", "fast"}))
      ->capture_default_str();
  add_format(ded_cmd, ded_fmt);

  PairArgs rec;
  FormatFlags rec_fmt;
  auto* rec_cmd = app.add_subcommand("reciprocity", "Check s(a,b) + s(b,a) against the closed form");
  rec_cmd->add_option("a", rec.a)->required();
  rec_cmd->add_option("b", rec.b)->required();
  rec_cmd->add_option("--method", rec.method, "sawtooth | fast")
      ->check(CLI::IsMember({"sawtooth", "fast"}))
      ->capture_default_str();
  add_format(rec_cmd, rec_fmt);

  EhrhartArgs ehr;
  FormatFlags ehr_fmt;
  std::int64_t count_t = 0, coeff_m = 0;
  int truncation = 0;
  auto* ehr_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial of the axis simplex with given intercepts");
  ehr_cmd->add_option("intercepts", ehr.intercepts, "pairwise coprime positive integers")->required();
  auto* count_opt = ehr_cmd->add_option("--count", count_t, "brute-force count of lattice points in t*P");
  auto* coeff_opt = ehr_cmd->add_option("--coeff", coeff_m, "print only coefficient c_m");
  auto* laurent_flag = ehr_cmd->add_flag("--laurent", ehr.laurent, "use the coth-product formula");
  auto* trunc_opt = ehr_cmd->add_option("--truncation", truncation, "series truncation order (default n+3)");
  trunc_opt->needs(laurent_flag);
  count_opt->excludes(laurent_flag)->excludes(coeff_opt);
  add_format(ehr_cmd, ehr_fmt);

  PairArgs dec;
  FormatFlags dec_fmt;
  auto* dec_cmd = app.add_subcommand("decompose", "Split the constant Ehrhart coefficient of the (a,b) triangle");
  dec_cmd->add_option("a", dec.a)->required();
  dec_cmd->add_option("b", dec.b)->required();
  add_format(dec_cmd, dec_fmt);

  SweepArgs swp;
  FormatFlags swp_fmt;
  auto* swp_cmd = app.add_subcommand("sweep", "Reciprocity table over a rectangle of coprime pairs");
  swp_cmd->add_option("a_range", swp.a_range, "MIN..MAX")->required();
  swp_cmd->add_option("b_range", swp.b_range, "MIN..MAX")->required();
  swp_cmd->add_option("--out", swp.out_path, "write the table to this file");
  add_format(swp_cmd, swp_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*ded_cmd) return cmd_dedekind(ded, ded_fmt.get(), out);
    if (*rec_cmd) return cmd_reciprocity(rec, rec_fmt.get(), out);
    if (*ehr_cmd) {
      if (*count_opt) ehr.count = count_t;
      if (*coeff_opt) ehr.coeff = coeff_m;
      if (*trunc_opt) ehr.truncation = truncation;
      return cmd_ehrhart(ehr, ehr_fmt.get(), out);
    }
    if (*dec_cmd) return cmd_decompose(dec, dec_fmt.get(), out);
    if (*swp_cmd) return cmd_sweep(swp, swp_fmt.get(), out);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const truncation_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kIdentityFailed;
  }
  return kInvalidInput;
}

}  // namespace dsum::cli
