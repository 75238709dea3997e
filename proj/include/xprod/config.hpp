// JSON instance files: a ring, a group and the twisting tables, or a
// group extension to build them from, plus campaign options. The loader
// validates the schema and index ranges and fills defaults (identity c,
// all-ones tau, trivial v, max_rank 2, seed 0); the algebraic conditions
// themselves are the verifiers' job, so a loadable instance can still
// fail its campaign.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "xprod/twist.hpp"

namespace xprod {

// A parse or schema problem in an instance file. `where` is a JSON
// pointer for semantic errors and "line L, column C" for parse errors.
struct ConfigError : std::runtime_error {
    std::string where;

    ConfigError(const std::string& msg, std::string where_)
        : std::runtime_error(msg + " (at " + where_ + ")"), where(std::move(where_)) {}
};

struct InstanceConfig {
    std::string name;
    TwistData twist;
    std::optional<ExtensionData> ext;  // present when built from an extension block
    std::optional<std::vector<int>> w1;
    int max_rank = 2;
    std::uint64_t seed = 0;
};

InstanceConfig load_config(const std::string& path);

// the same loader on in-memory text; `source` only labels parse errors
InstanceConfig load_config_text(const std::string& text, const std::string& source = "<text>");

}  // namespace xprod
