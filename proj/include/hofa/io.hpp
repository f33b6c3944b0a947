#ifndef HOFA_IO_HPP
#define HOFA_IO_HPP

#include <json.hpp>

#include <string>

#include "hofa/codim.hpp"
#include "hofa/cumulants.hpp"
#include "hofa/famodel.hpp"
#include "hofa/jacobian.hpp"
#include "hofa/simulate.hpp"

namespace hofa {

using Json = nlohmann::ordered_json;

// Tensor JSON: {"p":..,"order":..,"scalar":"rational"|"float","entries":
// [{"idx":[...weakly increasing],"val":...}]}; zero entries are omitted and
// rationals serialized as "num/den".
Json tensor_to_json(const SymTensor<Rational>& t);
Json tensor_to_json(const SymTensor<double>& t);
SymTensor<Rational> tensor_from_json_rational(const Json& j);
SymTensor<double> tensor_from_json_float(const Json& j);

Json sequence_to_json(const TensorSequence<Rational>& s);
Json sequence_to_json(const TensorSequence<double>& s);
TensorSequence<Rational> sequence_from_json_rational(const Json& j);
TensorSequence<double> sequence_from_json_float(const Json& j);
bool sequence_json_is_rational(const Json& j);

Json params_to_json(const FactorParams<Rational>& p);
FactorParams<Rational> params_from_json(const Json& j);

Json rank_report_to_json(const RankReport& r);
Json verify_summary_to_json(const VerifySummary& s);
Json dims_to_json(const ModelSpec& spec, const Dims& d);
Json regime_to_json(const RegimeReport& r);
Json polya_to_json(int k, int m, const std::optional<PolyaCertificate>& cert);
Json deviation_report_to_json(const DeviationReport& r);

/// Canonical serialization used for byte-identical round trips.
std::string dump_canonical(const Json& j);

/// Thrown on malformed input files; message names the offending field.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hofa

#endif
