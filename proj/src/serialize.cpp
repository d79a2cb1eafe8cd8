#include "qbeta/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace qbeta {

namespace fs = std::filesystem;

std::string rational_str(const mpq_class& x) { return x.get_str(10); }

mpq_class rational_parse(const std::string& s) {
  mpq_class x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_str(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [key, val] : j.items())
    p.set_coeff(std::stol(key), rational_parse(val.get<std::string>()));
  return p;
}

Json ratfunc_to_json(const RatFunc& f) {
  Json den = Json::object();
  for (const auto& [t, e] : f.den_factors()) den[std::to_string(t)] = e;
  return Json{{"num", laurent_to_json(f.num())}, {"den", std::move(den)}};
}

RatFunc ratfunc_from_json(const Json& j) {
  RatFunc::DenMap den;
  for (const auto& [key, val] : j.at("den").items()) den[std::stol(key)] = val.get<long>();
  return RatFunc(laurent_from_json(j.at("num")), std::move(den));
}

Json bundle_to_json(const LinearFormBundle& b) {
  Json j{{"format_version", kBundleFormatVersion},
         {"n", b.p.n},
         {"A", b.p.A},
         {"r", b.p.r}};
  auto table = [](const std::vector<std::vector<RatFunc>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const auto& f : row) r.push_back(ratfunc_to_json(f));
      out.push_back(std::move(r));
    }
    return out;
  };
  j["c"] = table(b.table.c);
  j["d"] = table(b.table.d);
  j["phat0"] = ratfunc_to_json(b.phat0);
  Json phat = Json::object();
  for (const auto& [jj, f] : b.phat) phat[std::to_string(jj)] = ratfunc_to_json(f);
  j["phat"] = std::move(phat);
  return j;
}

LinearFormBundle bundle_from_json(const Json& j) {
  if (j.at("format_version").get<int>() != kBundleFormatVersion)
    throw std::runtime_error("bundle format version mismatch");
  LinearFormBundle b;
  b.p = {j.at("n").get<long>(), j.at("A").get<long>(), j.at("r").get<long>()};
  b.p.validate();
  b.table.p = b.p;
  auto table = [](const Json& rows) {
    std::vector<std::vector<RatFunc>> out;
    for (const auto& row : rows) {
      std::vector<RatFunc> r;
      for (const auto& f : row) r.push_back(ratfunc_from_json(f));
      out.push_back(std::move(r));
    }
    return out;
  };
  b.table.c = table(j.at("c"));
  b.table.d = table(j.at("d"));
  b.phat0 = ratfunc_from_json(j.at("phat0"));
  for (const auto& [key, val] : j.at("phat").items())
    b.phat.emplace(std::stol(key), ratfunc_from_json(val));
  return b;
}

std::string bundle_cache_path(const std::string& dir, const FormParams& p) {
  return (fs::path(dir) / ("bundle_n" + std::to_string(p.n) + "_A" + std::to_string(p.A) +
                           "_r" + std::to_string(p.r) + ".json"))
      .string();
}

std::optional<LinearFormBundle> load_bundle(const std::string& dir, const FormParams& p) {
  std::ifstream in(bundle_cache_path(dir, p));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    LinearFormBundle b = bundle_from_json(j);
    if (!(b.p == p)) return std::nullopt;
    return b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_bundle(const std::string& dir, const LinearFormBundle& b) {
  fs::create_directories(dir);
  std::string final_path = bundle_cache_path(dir, b.p);
  std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) throw std::runtime_error("cannot write " + tmp_path);
    out << bundle_to_json(b).dump(1) << '\n';
  }
  fs::rename(tmp_path, final_path);
}

Json real_json(const Real& x, int digits) {
  return Json{{"value", x.str(digits)}, {"prec", static_cast<long>(x.prec())}};
}

namespace {

Json membership_json(const MembershipReport& m) {
  Json j{{"member", m.member()}, {"max_exponent", m.max_exponent}};
  if (m.first_bad_coeff)
    j["first_bad_coeff"] = Json{{"exponent", m.first_bad_coeff->first},
                                {"coeff", rational_str(m.first_bad_coeff->second)}};
  return j;
}

}  // namespace

Json integrality_to_json(const FormParams& p, const std::string& denom_name,
                         const IntegralityResult& res) {
  Json per_j = Json::object();
  for (const auto& [jj, m] : res.per_j) per_j[std::to_string(jj)] = membership_json(m);
  Json j{{"cell", Json::array({p.n, p.A, p.r})},
         {"denominator", denom_name},
         {"per_j", std::move(per_j)},
         {"all_member", res.all_member()}};
  if (res.gamma_fix_delta) j["minimal_shift"] = *res.gamma_fix_delta;
  return j;
}

Json conjecture_cell_to_json(const ConjectureCell& cell) {
  Json per_j = Json::object();
  for (const auto& [jj, m] : cell.per_j) {
    Json entry = membership_json(m);
    auto it = cell.minimal_shift.find(jj);
    if (it != cell.minimal_shift.end() && it->second) entry["minimal_shift"] = *it->second;
    per_j[std::to_string(jj)] = std::move(entry);
  }
  return Json{{"cell", Json::array({cell.p.n, cell.p.A, cell.p.r})},
              {"denominator", "Dn_tilde"},
              {"per_j", std::move(per_j)},
              {"all_member", cell.all_integral()}};
}

std::string rate_series_csv(const RateSeries& s) {
  std::string out = "n,value,limit,deviation\n";
  for (const auto& pt : s.points) {
    out += std::to_string(pt.n);
    out += ',';
    out += pt.value.str();
    out += ',';
    out += s.limit.str();
    out += ',';
    out += pt.deviation.str();
    out += '\n';
  }
  return out;
}

Json rate_series_json(const RateSeries& s) {
  Json pts = Json::array();
  for (const auto& pt : s.points)
    pts.push_back(Json{{"n", pt.n}, {"value", real_json(pt.value)},
                       {"deviation", real_json(pt.deviation)}});
  return Json{{"which", s.which},
              {"limit", real_json(s.limit)},
              {"one_sided", s.one_sided},
              {"points", std::move(pts)}};
}

void RunReport::add(const std::string& name, bool pass, Json data) {
  checks.push_back({name, pass ? "pass" : "fail", std::move(data)});
}

void RunReport::record(const std::string& name, Json data) {
  checks.push_back({name, "recorded", std::move(data)});
}

bool RunReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

Json RunReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"status", c.status}};
    if (!c.data.empty()) e["data"] = c.data;
    cs.push_back(std::move(e));
  }
  return Json{{"schema", "report_v1"},
              {"artifact_version", kArtifactVersion},
              {"command", command},
              {"params", params},
              {"precision", prec},
              {"checks", std::move(cs)},
              {"all_passed", all_passed()},
              {"wall_ms", wall_ms}};
}

}  // namespace qbeta
