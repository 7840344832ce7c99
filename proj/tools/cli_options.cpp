#include "cli_options.hpp"

#include <cstdlib>
#include <string>

#include "loewner/errors.hpp"

namespace loewner::cli {

MethodChoice parse_method(std::string_view text, double default_scale)
{
    if (text == "les")
        return {false, SupMethod::les_exact()};
    if (text == "trace")
        return {false, SupMethod::trace()};
    if (text == "channelwise")
        return {true, {}};
    if (text == "les-approx")
        return {false, SupMethod::les_approx(default_scale)};
    if (text.starts_with("les-approx:")) {
        const std::string num(text.substr(11));
        char* end = nullptr;
        const double m = std::strtod(num.c_str(), &end);
        if (num.empty() || end != num.c_str() + num.size())
            throw UsageError("bad scale in method '" + std::string(text) + "'");
        return {false, SupMethod::les_approx(m)};
    }
    throw UsageError("unknown method '" + std::string(text) + "' (les | les-approx[:m] | trace | channelwise)");
}

}  // namespace loewner::cli
