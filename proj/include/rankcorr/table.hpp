#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "regression.hpp"
#include "standardizer.hpp"

namespace rankcorr {

inline constexpr int kTableFormatVersion = 1;
inline constexpr std::uint64_t kFirstTabulatedLength = 3;
inline constexpr std::uint64_t kLastExactLength = 10;

/// Everything needed to produce DistributionParams for one configuration.
struct ParameterEntry {
  CoefficientConfig config;
  std::map<std::uint64_t, DistributionParams> exact;  // n = 3..10
  RegressionModel model_gamma;
  RegressionModel model_variance;
  RegressionModel model_left_variance;
  // Corrections of individual published exact cells; applied on lookup.
  std::map<std::uint64_t, DistributionParams> errata;
  std::string provenance;
};

struct ParameterTable {
  int format_version = kTableFormatVersion;
  std::vector<ParameterEntry> entries;

  [[nodiscard]] const ParameterEntry* find(const CoefficientConfig& config) const {
    for (const auto& e : entries)
      if (e.config == config) return &e;
    return nullptr;
  }
};

enum class Provenance { Identity, TwoPoint, Exact, ExactErrata, Regression, Extrapolated };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Identity: return "identity";
    case Provenance::TwoPoint: return "two-point";
    case Provenance::Exact: return "exact";
    case Provenance::ExactErrata: return "exact-errata";
    case Provenance::Regression: return "regression";
    case Provenance::Extrapolated: return "extrapolated";
  }
  return "?";
}

struct ParameterLookup {
  DistributionParams params;
  Provenance provenance = Provenance::Exact;
};

/// Parameters for (config, n): identity for unweighted coefficients, the
/// symmetric two-point law at n = 2, tabulated values for 3 <= n <= 10 and the
/// regression models beyond.
inline ParameterLookup lookup_params(const ParameterTable& table, const CoefficientConfig& config,
                                     std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidLength, "parameters need n >= 2");
  if (!config.is_weighted()) return {DistributionParams{0.0, 1.0, 0.5}, Provenance::Identity};
  if (n == 2) return {DistributionParams{0.0, 1.0, 0.5}, Provenance::TwoPoint};
  const ParameterEntry* entry = table.find(config);
  if (entry == nullptr) throw Error(ErrorCode::UnknownConfig, to_string(config) + " not in table");
  if (n <= kLastExactLength) {
    if (auto it = entry->errata.find(n); it != entry->errata.end())
      return {it->second, Provenance::ExactErrata};
    return {entry->exact.at(n), Provenance::Exact};
  }
  const auto g = evaluate_model(entry->model_gamma, n);
  const auto v = evaluate_model(entry->model_variance, n);
  const auto l = evaluate_model(entry->model_left_variance, n);
  const bool extrapolated = g.extrapolated || v.extrapolated || l.extrapolated;
  return {DistributionParams{g.value, v.value, l.value},
          extrapolated ? Provenance::Extrapolated : Provenance::Regression};
}

struct ResolvedStandardizer {
  Standardizer g;
  ParameterLookup lookup;
};

/// Standardizer for (config, n). Unweighted coefficients get the identity
/// without consulting the table.
inline ResolvedStandardizer resolve_standardizer(const ParameterTable& table,
                                                 const CoefficientConfig& config, std::uint64_t n,
                                                 const Tolerances& tol = {}) {
  auto lookup = lookup_params(table, config, n);
  if (lookup.provenance == Provenance::Identity) return {Standardizer::identity(), lookup};
  return {build_standardizer(lookup.params, tol), lookup};
}

// ---------------------------------------------------------------------------
// JSON file format. Every number is a decimal string so that published values
// survive a load/serialize cycle character for character.

namespace detail {

inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_number(const nlohmann::json& j, std::string_view what) {
  if (!j.is_string()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be a string");
  const auto& s = j.get_ref<const std::string&>();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw Error(ErrorCode::SchemaError, std::string(what) + ": bad number '" + s + "'");
  return v;
}

inline nlohmann::json params_to_json(const DistributionParams& p) {
  return {{"gamma_bar", format_number(p.gamma_bar)},
          {"variance", format_number(p.variance)},
          {"left_variance", format_number(p.left_variance)}};
}

inline nlohmann::json model_to_json(const RegressionModel& m) {
  nlohmann::json coefs = nlohmann::json::array();
  for (double c : m.coefficients) coefs.push_back(format_number(c));
  return {{"transform", to_string(m.transform)},
          {"n_max", m.n_max ? std::to_string(*m.n_max) : std::string("inf")},
          {"coefficients", coefs}};
}

inline RegressionModel model_from_json(const nlohmann::json& j) {
  RegressionModel m;
  const auto& t = j.at("transform").get_ref<const std::string&>();
  if (t == "inverse") {
    m.transform = LengthTransform::Inverse;
  } else if (t == "inverse_log") {
    m.transform = LengthTransform::InverseLog;
  } else {
    throw Error(ErrorCode::SchemaError, "unknown transform '" + t + "'");
  }
  const auto& nmax = j.at("n_max").get_ref<const std::string&>();
  if (nmax != "inf") {
    try {
      m.n_max = std::stoull(nmax);
    } catch (const std::exception&) {
      throw Error(ErrorCode::SchemaError, "bad n_max '" + nmax + "'");
    }
  }
  for (const auto& c : j.at("coefficients")) m.coefficients.push_back(parse_number(c, "coefficient"));
  if (m.coefficients.empty()) throw Error(ErrorCode::SchemaError, "model without coefficients");
  return m;
}

inline std::map<std::uint64_t, DistributionParams> params_map_from_json(const nlohmann::json& j,
                                                                        bool partial,
                                                                        const std::map<std::uint64_t, DistributionParams>* base) {
  std::map<std::uint64_t, DistributionParams> out;
  for (const auto& [key, cell] : j.items()) {
    std::uint64_t n = 0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), n);
    if (res.ec != std::errc{} || res.ptr != key.data() + key.size())
      throw Error(ErrorCode::SchemaError, "bad length key '" + key + "'");
    DistributionParams p;
    if (partial && base != nullptr && base->count(n)) p = base->at(n);
    if (!partial || cell.contains("gamma_bar")) p.gamma_bar = parse_number(cell.at("gamma_bar"), "gamma_bar");
    if (!partial || cell.contains("variance")) p.variance = parse_number(cell.at("variance"), "variance");
    if (!partial || cell.contains("left_variance"))
      p.left_variance = parse_number(cell.at("left_variance"), "left_variance");
    out[n] = p;
  }
  return out;
}

}  // namespace detail

inline nlohmann::json entry_to_json(const ParameterEntry& e) {
  nlohmann::json j;
  j["coefficient"] = to_string(e.config.kind);
  if (e.config.weighting) {
    const auto& f = e.config.weighting->function;
    j["scheme"] = to_string(e.config.weighting->scheme);
    std::string kind = f.kind == WeightFunction::Kind::Harmonic            ? "harmonic"
                       : f.kind == WeightFunction::Kind::InverseQuadratic ? "inverse_quadratic"
                                                                          : "constant";
    j["weight_function"] = {{"kind", kind}, {"n0", f.n0}};
  } else {
    j["scheme"] = "none";
  }
  nlohmann::json exact = nlohmann::json::object();
  for (const auto& [n, p] : e.exact) exact[std::to_string(n)] = detail::params_to_json(p);
  j["exact"] = exact;
  j["models"] = {{"gamma", detail::model_to_json(e.model_gamma)},
                 {"variance", detail::model_to_json(e.model_variance)},
                 {"left_variance", detail::model_to_json(e.model_left_variance)}};
  if (!e.errata.empty()) {
    nlohmann::json errata = nlohmann::json::object();
    for (const auto& [n, p] : e.errata) {
      // Only the fields that differ from the published cell are recorded.
      nlohmann::json cell = nlohmann::json::object();
      const auto base = e.exact.find(n);
      const auto full = detail::params_to_json(p);
      if (base == e.exact.end() || base->second.gamma_bar != p.gamma_bar) cell["gamma_bar"] = full["gamma_bar"];
      if (base == e.exact.end() || base->second.variance != p.variance) cell["variance"] = full["variance"];
      if (base == e.exact.end() || base->second.left_variance != p.left_variance)
        cell["left_variance"] = full["left_variance"];
      errata[std::to_string(n)] = cell;
    }
    j["errata"] = errata;
  }
  if (!e.provenance.empty()) j["provenance"] = e.provenance;
  return j;
}

inline ParameterEntry entry_from_json(const nlohmann::json& j) {
  ParameterEntry e;
  e.config.kind = parse_coefficient_kind(j.at("coefficient").get<std::string>());
  const auto scheme = j.at("scheme").get<std::string>();
  if (scheme != "none") {
    const auto& wf = j.at("weight_function");
    const auto kind = wf.at("kind").get<std::string>();
    WeightFunction f;
    if (kind == "harmonic") {
      f = WeightFunction::harmonic();
    } else if (kind == "inverse_quadratic") {
      f = WeightFunction::inverse_quadratic(wf.at("n0").get<unsigned>());
    } else if (kind == "constant") {
      f = WeightFunction::constant();
    } else {
      throw Error(ErrorCode::SchemaError, "unknown weight function '" + kind + "'");
    }
    e.config.weighting = Weighting{f, parse_weight_scheme(scheme)};
  }
  e.exact = detail::params_map_from_json(j.at("exact"), false, nullptr);
  if (e.exact.size() != kLastExactLength - kFirstTabulatedLength + 1)
    throw Error(ErrorCode::SchemaError, "exact block must hold n = 3..10, found " +
                                            std::to_string(e.exact.size()) + " cells");
  for (std::uint64_t n = kFirstTabulatedLength; n <= kLastExactLength; ++n)
    if (!e.exact.count(n)) throw Error(ErrorCode::SchemaError, "exact block misses n = " + std::to_string(n));
  const auto& models = j.at("models");
  e.model_gamma = detail::model_from_json(models.at("gamma"));
  e.model_variance = detail::model_from_json(models.at("variance"));
  e.model_left_variance = detail::model_from_json(models.at("left_variance"));
  if (j.contains("errata")) e.errata = detail::params_map_from_json(j.at("errata"), true, &e.exact);
  if (j.contains("provenance")) e.provenance = j.at("provenance").get<std::string>();
  return e;
}

inline std::string serialize_table(const ParameterTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries) entries.push_back(entry_to_json(e));
  nlohmann::json doc = {{"format_version", t.format_version}, {"entries", entries}};
  return doc.dump(2) + "\n";
}

inline ParameterTable load_table(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
  try {
    ParameterTable t;
    t.format_version = doc.at("format_version").get<int>();
    if (t.format_version != kTableFormatVersion)
      throw Error(ErrorCode::VersionMismatch, "table format " + std::to_string(t.format_version) +
                                                  ", expected " + std::to_string(kTableFormatVersion));
    for (const auto& ej : doc.at("entries")) {
      auto e = entry_from_json(ej);
      if (t.find(e.config) != nullptr)
        throw Error(ErrorCode::SchemaError, "duplicate entry for " + to_string(e.config));
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

}  // namespace rankcorr
