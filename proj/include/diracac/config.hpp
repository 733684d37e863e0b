#pragma once

#include <map>
#include <string>

#include "diracac/model.hpp"

namespace diracac {

// Flat run-configuration format: one `key = value` per line, `#` comments,
// blank lines ignored. Command-line flags override file keys, which override
// the built-in defaults.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

double config_double(const ConfigMap& kv, const std::string& key,
                     double fallback);
int config_int(const ConfigMap& kv, const std::string& key, int fallback);
std::string config_string(const ConfigMap& kv, const std::string& key,
                          const std::string& fallback);

// Round-trip helpers for the domain types.
std::string background_to_config(const Background& bg);
Background background_from_config(const ConfigMap& kv);
std::string params_to_config(const PhysicalParams& params);
PhysicalParams params_from_config(const ConfigMap& kv);
std::string quantum_numbers_to_config(const QuantumNumbers& qn);
QuantumNumbers quantum_numbers_from_config(const ConfigMap& kv);
std::string zeta_to_config(const ZetaValue& zeta);
ZetaValue zeta_from_config(const ConfigMap& kv);

}  // namespace diracac
