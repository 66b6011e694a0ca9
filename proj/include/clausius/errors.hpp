#pragma once

#include <stdexcept>
#include <string>

namespace clausius {

enum class errc {
    invalid_dimension,
    invalid_parameter,
    dimension_mismatch,
    hermiticity_violation,
    invalid_state,
    numerical_failure,
    integration_failure,
    model_inconsistency,
    no_crossover,
    postulate_violation,
};

const char* to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_dimension: return "invalid-dimension";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::hermiticity_violation: return "hermiticity-violation";
    case errc::invalid_state: return "invalid-state";
    case errc::numerical_failure: return "numerical-failure";
    case errc::integration_failure: return "integration-failure";
    case errc::model_inconsistency: return "model-inconsistency";
    case errc::no_crossover: return "no-crossover";
    case errc::postulate_violation: return "postulate-violation";
    }
    return "unknown";
}

} // namespace clausius
