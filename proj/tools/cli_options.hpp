#pragma once

#include <string_view>

#include "loewner/suprema.hpp"

namespace loewner::cli {

/// Back-end named by --method.
struct MethodChoice {
    bool channelwise = false;
    SupMethod method{};
};

/// Accepts "les", "les-approx", "les-approx:<m>", "trace" and "channelwise".
/// Throws UsageError otherwise. `default_scale` is used for a bare "les-approx".
MethodChoice parse_method(std::string_view text, double default_scale = 1e4);

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kNumeric = 3,
};

}  // namespace loewner::cli
