#pragma once

#include <json.hpp>

#include "ggs/cancel.hpp"
#include "ggs/chain.hpp"
#include "ggs/model.hpp"
#include "ggs/morse.hpp"
#include "ggs/spectral.hpp"

namespace ggs {

nlohmann::json pair_to_json(const GGSPair& pair);
GGSPair pair_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const ChainComplex& cc);
nlohmann::json report_to_json(const ValidationReport& rep);
nlohmann::json homology_to_json(const HomologyResult& h);
nlohmann::json sweep_to_json(const ChainComplex& cc, const SweepResult& sweep);
nlohmann::json oracle_to_json(const ChainComplex& cc, const OracleResult& oracle);
nlohmann::json trace_to_json(const ReductionTrace& trace);

}  // namespace ggs
