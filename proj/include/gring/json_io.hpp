#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gring/abelianize.hpp"
#include "gring/checkable.hpp"
#include "gring/codes.hpp"
#include "gring/hatgroup.hpp"
#include "gring/ring.hpp"

namespace gring {

// System file: {"field": {"p":..,"m":..,"modulus":[..]?},
//               "group": {"builtin":"S3"} | {"table":[[..],..]},
//               "sigma": [e0..]?, "alpha": [[codes]]?}
// The identity row/column of alpha may be omitted ((n-1)x(n-1) form).
SystemPtr system_from_json(const nlohmann::json& j);
SystemPtr load_system_file(const std::string& path);
nlohmann::json system_to_json(const CrossedSystem& sys);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const TransferReport& r);
nlohmann::json to_json(const CheckableScan& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json code_to_json(const LinearCode& code, const std::vector<uint32_t>& generator);
nlohmann::json witness_to_json(const MonomialWitness& w, const std::string& target_group);
nlohmann::json to_json(const ReduceResult& r);

}  // namespace gring
