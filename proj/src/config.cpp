#include "diracac/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "diracac/io.hpp"

namespace diracac {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key +
                                    "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    const auto res =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
        throw std::invalid_argument("config: bad integer value for '" + key +
                                    "': " + value);
    return v;
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " +
                                        std::to_string(lineno) +
                                        " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config: empty key on line " +
                                        std::to_string(lineno));
        kv[key] = value;
    }
    return kv;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

double config_double(const ConfigMap& kv, const std::string& key,
                     double fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_double(key, it->second);
}

int config_int(const ConfigMap& kv, const std::string& key, int fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_int(key, it->second);
}

std::string config_string(const ConfigMap& kv, const std::string& key,
                          const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

std::string background_to_config(const Background& bg) {
    std::ostringstream os;
    os << "background = " << background_kind_name(bg.kind) << "\n"
       << "eta = " << format_double(bg.eta) << "\n"
       << "chi = " << format_double(bg.chi) << "\n";
    return os.str();
}

Background background_from_config(const ConfigMap& kv) {
    const std::string kind = config_string(kv, "background", "minkowski");
    Background bg;
    if (kind == "minkowski")
        bg = Background::minkowski();
    else if (kind == "string")
        bg = Background::cosmic_string(config_double(kv, "eta", 1.0));
    else if (kind == "dislocation")
        bg = Background::cosmic_dislocation(config_double(kv, "eta", 1.0),
                                            config_double(kv, "chi", 0.0));
    else
        throw std::invalid_argument("config: unknown background kind: " + kind);
    return validate_background(bg), bg;
}

std::string params_to_config(const PhysicalParams& params) {
    std::ostringstream os;
    os << "mass = " << format_double(params.mass) << "\n"
       << "omega = " << format_double(params.omega) << "\n"
       << "mu_lambda = " << format_double(params.mu_lambda) << "\n"
       << "k = " << format_double(params.k) << "\n";
    return os.str();
}

PhysicalParams params_from_config(const ConfigMap& kv) {
    PhysicalParams p;
    p.mass = config_double(kv, "mass", p.mass);
    p.omega = config_double(kv, "omega", p.omega);
    p.mu_lambda = config_double(kv, "mu_lambda", p.mu_lambda);
    p.k = config_double(kv, "k", p.k);
    validate_params(p);
    return p;
}

std::string quantum_numbers_to_config(const QuantumNumbers& qn) {
    std::ostringstream os;
    os << "n = " << qn.n << "\n"
       << "l = " << qn.l << "\n"
       << "spin = " << (qn.s > 0 ? "+1" : "-1") << "\n";
    return os.str();
}

QuantumNumbers quantum_numbers_from_config(const ConfigMap& kv) {
    QuantumNumbers qn;
    qn.n = config_int(kv, "n", qn.n);
    qn.l = config_int(kv, "l", qn.l);
    const std::string spin = config_string(kv, "spin", "+1");
    if (spin == "+1" || spin == "1")
        qn.s = +1;
    else if (spin == "-1")
        qn.s = -1;
    else
        throw std::invalid_argument("config: spin must be +1 or -1");
    validate_quantum_numbers(qn);
    return qn;
}

std::string zeta_to_config(const ZetaValue& zeta) {
    return "zeta = " + format_double(zeta.value) + "\n";
}

ZetaValue zeta_from_config(const ConfigMap& kv) {
    return {config_double(kv, "zeta", 0.0)};
}

}  // namespace diracac
