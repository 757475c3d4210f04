// verify.hpp: property sweeps over exactmath and the FSP oracles, as run by
// the `verify` CLI subcommand.
#pragma once
#include <functional>
#include <string>
#include <vector>

namespace fsp {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every sweep; `on_result`, when set, is called as each check finishes.
std::vector<CheckResult> run_property_sweeps(const std::function<void(const CheckResult&)>& on_result = {});

} // namespace fsp
