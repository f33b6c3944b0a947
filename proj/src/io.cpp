#include "hofa/io.hpp"

#include <cmath>

namespace hofa {

namespace {

template <typename T>
Json tensor_to_json_impl(const SymTensor<T>& t, const char* scalar) {
  Json j;
  j["p"] = t.p();
  j["order"] = t.order();
  j["scalar"] = scalar;
  Json entries = Json::array();
  const auto idxs = enumerate_indices(t.p(), t.order());
  for (std::size_t e = 0; e < idxs.size(); ++e) {
    const T& v = t.data()[e];
    if (v == T{}) continue;
    Json entry;
    entry["idx"] = idxs[e].values();
    if constexpr (std::is_same_v<T, Rational>) {
      entry["val"] = rational_to_string(v);
    } else {
      entry["val"] = v;
    }
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

int require_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw InputError(std::string("missing or non-integer field: ") + field);
  }
  return j[field].get<int>();
}

template <typename T, typename ValFn>
SymTensor<T> tensor_from_json_impl(const Json& j, const char* scalar, ValFn&& val_fn) {
  const int p = require_int(j, "p");
  const int order = require_int(j, "order");
  if (!j.contains("scalar") || j["scalar"] != scalar) {
    throw InputError(std::string("field scalar must be \"") + scalar + "\"");
  }
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw InputError("missing or non-array field: entries");
  }
  SymTensor<T> t(p, order);
  for (const auto& entry : j["entries"]) {
    if (!entry.contains("idx") || !entry["idx"].is_array()) {
      throw InputError("tensor entry missing field: idx");
    }
    std::vector<int> idx;
    for (const auto& v : entry["idx"]) {
      if (!v.is_number_integer()) throw InputError("non-integer value in field: idx");
      idx.push_back(v.get<int>());
    }
    if (!entry.contains("val")) throw InputError("tensor entry missing field: val");
    try {
      t(std::move(idx)) = val_fn(entry["val"]);
    } catch (const std::domain_error& e) {
      throw InputError(std::string("bad tensor entry idx: ") + e.what());
    }
  }
  return t;
}

}  // namespace

Json tensor_to_json(const SymTensor<Rational>& t) { return tensor_to_json_impl(t, "rational"); }
Json tensor_to_json(const SymTensor<double>& t) { return tensor_to_json_impl(t, "float"); }

SymTensor<Rational> tensor_from_json_rational(const Json& j) {
  return tensor_from_json_impl<Rational>(j, "rational", [](const Json& v) {
    if (!v.is_string()) throw InputError("rational field val must be a \"num/den\" string");
    return parse_rational(v.get<std::string>());
  });
}

SymTensor<double> tensor_from_json_float(const Json& j) {
  return tensor_from_json_impl<double>(j, "float", [](const Json& v) {
    if (!v.is_number()) throw InputError("float field val must be a number");
    return v.get<double>();
  });
}

namespace {

template <typename T>
Json sequence_to_json_impl(const TensorSequence<T>& s) {
  Json j;
  j["p"] = s.p;
  j["max_order"] = s.max_order;
  j["zero_mean"] = s.zero_mean;
  Json tensors = Json::array();
  for (int r = s.first_order(); r <= s.max_order; ++r) tensors.push_back(tensor_to_json(s.order(r)));
  j["tensors"] = std::move(tensors);
  return j;
}

template <typename T, typename TensorFn>
TensorSequence<T> sequence_from_json_impl(const Json& j, TensorFn&& tensor_fn) {
  const int p = require_int(j, "p");
  const int max_order = require_int(j, "max_order");
  if (!j.contains("zero_mean") || !j["zero_mean"].is_boolean()) {
    throw InputError("missing or non-boolean field: zero_mean");
  }
  auto s = TensorSequence<T>::zeros(p, max_order, j["zero_mean"].get<bool>());
  if (!j.contains("tensors") || !j["tensors"].is_array()) {
    throw InputError("missing or non-array field: tensors");
  }
  const int expected = max_order - s.first_order() + 1;
  if (static_cast<int>(j["tensors"].size()) != expected) {
    throw InputError("field tensors must hold one tensor per order " +
                     std::to_string(s.first_order()) + ".." + std::to_string(max_order));
  }
  int r = s.first_order();
  for (const auto& tj : j["tensors"]) {
    SymTensor<T> t = tensor_fn(tj);
    if (t.p() != p || t.order() != r) {
      throw InputError("tensor at order " + std::to_string(r) + " has mismatched p or order");
    }
    s.order(r) = std::move(t);
    ++r;
  }
  return s;
}

}  // namespace

Json sequence_to_json(const TensorSequence<Rational>& s) { return sequence_to_json_impl(s); }
Json sequence_to_json(const TensorSequence<double>& s) { return sequence_to_json_impl(s); }

TensorSequence<Rational> sequence_from_json_rational(const Json& j) {
  return sequence_from_json_impl<Rational>(j, tensor_from_json_rational);
}
TensorSequence<double> sequence_from_json_float(const Json& j) {
  return sequence_from_json_impl<double>(j, tensor_from_json_float);
}

bool sequence_json_is_rational(const Json& j) {
  if (!j.contains("tensors") || !j["tensors"].is_array() || j["tensors"].empty()) {
    throw InputError("missing or non-array field: tensors");
  }
  const auto& t0 = j["tensors"][0];
  if (!t0.contains("scalar") || !t0["scalar"].is_string()) {
    throw InputError("tensor missing field: scalar");
  }
  const std::string s = t0["scalar"].get<std::string>();
  if (s == "rational") return true;
  if (s == "float") return false;
  throw InputError("field scalar must be \"rational\" or \"float\"");
}

Json params_to_json(const FactorParams<Rational>& p) {
  Json j;
  j["p"] = p.spec.p;
  j["m"] = p.spec.m;
  j["k"] = p.spec.k;
  const auto labels = coord_labels(p.spec);
  const auto coords = p.flatten();
  Json names = Json::array(), values = Json::array();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    names.push_back(labels[i]);
    values.push_back(rational_to_string(coords[i]));
  }
  j["labels"] = std::move(names);
  j["coords"] = std::move(values);
  return j;
}

FactorParams<Rational> params_from_json(const Json& j) {
  const ModelSpec spec(require_int(j, "p"), require_int(j, "m"), require_int(j, "k"));
  if (!j.contains("coords") || !j["coords"].is_array()) {
    throw InputError("missing or non-array field: coords");
  }
  std::vector<Rational> coords;
  for (const auto& v : j["coords"]) {
    if (!v.is_string()) throw InputError("field coords must hold \"num/den\" strings");
    coords.push_back(parse_rational(v.get<std::string>()));
  }
  if (static_cast<long long>(coords.size()) != spec.M()) {
    throw InputError("field coords must have length M = " + std::to_string(spec.M()));
  }
  return FactorParams<Rational>::unflatten(spec, coords);
}

namespace {
const char* method_name(RankMethod m) {
  switch (m) {
    case RankMethod::Svd: return "svd";
    case RankMethod::ModP: return "modp";
    case RankMethod::Exact: return "exact";
  }
  return "?";
}
const char* point_name(PointKind p) {
  switch (p) {
    case PointKind::RandomFloat: return "random-float";
    case PointKind::RandomModP: return "random-modp";
    case PointKind::Witness: return "witness";
  }
  return "?";
}
}  // namespace

Json rank_report_to_json(const RankReport& r) {
  Json j;
  j["method"] = method_name(r.method);
  j["point"] = point_name(r.point);
  j["computed_rank"] = r.computed_rank;
  j["expected_rank"] = r.expected_rank;
  j["restricted"] = r.restricted;
  if (r.method == RankMethod::Svd) j["gap"] = std::isinf(r.gap) ? Json("inf") : Json(r.gap);
  if (r.method == RankMethod::ModP) j["prime"] = r.prime;
  return j;
}

Json verify_summary_to_json(const VerifySummary& s) {
  Json j;
  j["p"] = s.spec.p;
  j["m"] = s.spec.m;
  j["k"] = s.spec.k;
  j["expected_rank"] = s.expected_rank;
  j["seed"] = s.seed;
  j["asserted"] = s.asserted;
  j["certifiable"] = s.certifiable;
  j["all_match"] = s.all_match;
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(rank_report_to_json(r));
  j["reports"] = std::move(reports);
  return j;
}

Json dims_to_json(const ModelSpec& spec, const Dims& d) {
  Json j;
  j["p"] = spec.p;
  j["m"] = spec.m;
  j["k"] = spec.k;
  j["M"] = d.M;
  j["N"] = d.N;
  j["N_prime"] = d.N_prime;
  j["dim"] = d.dim;
  j["codim"] = d.codim;
  return j;
}

Json regime_to_json(const RegimeReport& r) {
  Json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["root_count"] = r.roots.size();
  Json roots = Json::array();
  for (const auto& iv : r.roots) {
    Json interval;
    interval["lo"] = rational_to_string(iv.lo);
    interval["hi"] = rational_to_string(iv.hi);
    interval["mid"] = to_double((iv.lo + iv.hi) / 2);
    roots.push_back(std::move(interval));
  }
  j["roots"] = std::move(roots);
  switch (r.regime) {
    case RootRegime::OneRoot: j["regime"] = "one-root"; break;
    case RootRegime::TwoRoots: j["regime"] = "two-roots"; break;
    case RootRegime::NoRoot: j["regime"] = "no-root"; break;
  }
  j["p0"] = r.p0;
  return j;
}

Json polya_to_json(int k, int m, const std::optional<PolyaCertificate>& cert) {
  Json j;
  j["k"] = k;
  j["m"] = m;
  j["certified"] = cert.has_value();
  if (cert) {
    j["b"] = rational_to_string(cert->shift_b);
    j["multiplier_degree"] = cert->degree;
    j["multiplier"] = cert->multiplier.str();
  }
  return j;
}

Json deviation_report_to_json(const DeviationReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  Json orders = Json::array();
  for (const auto& od : r.per_order) {
    Json o;
    o["order"] = od.order;
    o["max_abs_deviation"] = od.max_abs_deviation;
    o["max_normalized_deviation"] = od.max_normalized_deviation;
    orders.push_back(std::move(o));
  }
  j["per_order"] = std::move(orders);
  j["max_normalized"] = r.max_normalized;
  switch (r.flag) {
    case DeviationFlag::Pass: j["flag"] = "pass"; break;
    case DeviationFlag::Warn: j["flag"] = "warn"; break;
    case DeviationFlag::Fail: j["flag"] = "fail"; break;
  }
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hofa
