#ifndef ZOLO_CLI_RESULT_HPP
#define ZOLO_CLI_RESULT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "zolo/zolotarev.hpp"

namespace zolo::cli {

// Result document of `zolo solve`. Z3 fields (sigma, p, poles_rstar, zeros_rstar, min_on_F,
// max_on_E) are present only when the conversion succeeded.
nlohmann::json result_document(const Solution &solution);

// The published JSON Schema (draft 2020-12) for result documents.
const nlohmann::json &result_schema();

// Checks `doc` against result_schema(); returns one message per violation.
std::vector<std::string> validate_result_document(const nlohmann::json &doc);

} // namespace zolo::cli

#endif // ZOLO_CLI_RESULT_HPP
