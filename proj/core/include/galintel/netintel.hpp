#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "galintel/rational.hpp"

namespace galintel {

/// Architecture metadata of a trained feed-forward network. Weight and
/// bias tensors are represented only by the count 2(N_h + 1); activations
/// are never evaluated.
struct NetworkSpec {
    std::string name;
    long long hidden_layers = 0;       // N_h
    long long io_variable_count = 0;   // N_O
    std::string notes;
};

struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NetworkSpec network_from_json(const nlohmann::json& doc);
NetworkSpec load_network_spec(const std::filesystem::path& file);

/// N_E = 2(N_h + 1); at least 4 for any valid spec.
long long nn_empirical_constants(const NetworkSpec& spec);

/// I = 1 - 2(N_h + 1)/N_O, exact.
Rational nn_score(const NetworkSpec& spec);

struct AsymptoticScore {
    long long value = 0;     // -N_h
    bool applicable = false; // N_h >= threshold_ratio * N_O
    Rational exact;          // nn_score, always reported alongside
};

inline constexpr long long kDefaultAsymptoticThresholdRatio = 100;

AsymptoticScore nn_asymptotic_score(const NetworkSpec& spec,
                                    long long threshold_ratio = kDefaultAsymptoticThresholdRatio);

}  // namespace galintel
