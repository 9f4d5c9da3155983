#include "galintel/netintel.hpp"

#include <fstream>

namespace galintel {

namespace {

void check(const NetworkSpec& spec) {
    if (spec.hidden_layers < 1) {
        throw InvalidSpec("hidden_layers must be >= 1 (got " +
                          std::to_string(spec.hidden_layers) + ")");
    }
    if (spec.io_variable_count < 1) {
        throw InvalidSpec("io_variable_count must be >= 1 (got " +
                          std::to_string(spec.io_variable_count) + ")");
    }
}

}  // namespace

NetworkSpec network_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw InvalidSpec("network spec must be a JSON object");
    }
    NetworkSpec spec;
    spec.name = doc.value("name", "");
    spec.hidden_layers = doc.value("hidden_layers", 0LL);
    spec.io_variable_count = doc.value("io_variable_count", 0LL);
    spec.notes = doc.value("notes", "");
    check(spec);
    return spec;
}

NetworkSpec load_network_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::ios_base::failure("cannot open network spec: " + file.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidSpec(file.string() + ": " + e.what());
    }
    return network_from_json(doc);
}

long long nn_empirical_constants(const NetworkSpec& spec) {
    check(spec);
    return 2 * (spec.hidden_layers + 1);
}

Rational nn_score(const NetworkSpec& spec) {
    return Rational(1) - Rational(nn_empirical_constants(spec), spec.io_variable_count);
}

AsymptoticScore nn_asymptotic_score(const NetworkSpec& spec, long long threshold_ratio) {
    check(spec);
    AsymptoticScore out;
    out.value = -spec.hidden_layers;
    out.applicable = spec.hidden_layers >= threshold_ratio * spec.io_variable_count;
    out.exact = nn_score(spec);
    return out;
}

}  // namespace galintel
