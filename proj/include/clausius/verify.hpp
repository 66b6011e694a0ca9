// verify.hpp: the cross-check suite behind `clausius verify`.

#pragma once

#include "clausius/config.hpp"
#include "clausius/interferometer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace clausius::app {

enum class CheckStatus { pass, fail, info };

struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::info;
    double metric = 0.0;
};

struct VerifyReport {
    std::vector<CheckLine> lines;

    bool passed() const;
    /// 0 when every asserted check passed, 1 otherwise.
    int exit_code() const;
    const CheckLine* find(const std::string& name) const;
};

struct VerifyOptions {
    /// Closed-form transcription under test by the endpoint checks.
    interferometer::ClosedFormBuilder builder = interferometer::closed_form_matrix;
};

VerifyReport run_verify(const RunConfig& cfg, const VerifyOptions& opts = {});

/// One "name status metric" line per check.
void print_report(const VerifyReport& report, std::ostream& out);

} // namespace clausius::app
