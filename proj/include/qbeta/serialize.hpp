#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbeta/asymptotics.hpp"
#include "qbeta/denominators.hpp"
#include "qbeta/linear_forms.hpp"

#include "json.hpp"

namespace qbeta {

/* Insertion-ordered JSON keeps emitted reports byte-deterministic. */
using Json = nlohmann::ordered_json;

inline constexpr int kBundleFormatVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/* "num" or "num/den" in base 10, canonical form. */
std::string rational_str(const mpq_class& x);
mpq_class rational_parse(const std::string& s);

/* { "<exponent>": "<rational>" }, ascending exponents. */
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/* { "num": {...}, "den": { "<t>": e } } */
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json bundle_to_json(const LinearFormBundle& b);
LinearFormBundle bundle_from_json(const Json& j);

/* Disk cache keyed by (n, A, r); stale format versions read as absent. */
std::string bundle_cache_path(const std::string& dir, const FormParams& p);
std::optional<LinearFormBundle> load_bundle(const std::string& dir, const FormParams& p);
void store_bundle(const std::string& dir, const LinearFormBundle& b);

/* Decimal value with its precision annotation. */
Json real_json(const Real& x, int digits = 30);

Json integrality_to_json(const FormParams& p, const std::string& denom_name,
                         const IntegralityResult& res);
Json conjecture_cell_to_json(const ConjectureCell& cell);

/* CSV with header "n,value,limit,deviation". */
std::string rate_series_csv(const RateSeries& s);
Json rate_series_json(const RateSeries& s);

struct CheckResult {
  std::string name;
  std::string status;  /* pass | fail | recorded */
  Json data;
};

struct RunReport {
  std::string command;
  Json params = Json::object();
  std::vector<CheckResult> checks;
  double wall_ms = 0;
  long prec = 0;

  void add(const std::string& name, bool pass, Json data = Json::object());
  /* "recorded" is reserved for conjecture evidence; it never fails a run. */
  void record(const std::string& name, Json data);
  bool all_passed() const;
  Json to_json() const;
};

}  // namespace qbeta
