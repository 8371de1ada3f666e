#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpa/tensor.hpp"

namespace hpa {

struct AxiomCheck {
    std::string id;
    bool passed = true;
    Witness witness;  // empty when passed
    std::string note;
};

class AxiomReport {
public:
    void add(std::string id, std::optional<Witness> violation, std::string note = {});
    void add_flag(std::string id, bool passed, std::string note = {});
    void append(const AxiomReport& other, const std::string& prefix = {});

    bool all_passed() const;
    bool has(std::string_view id) const;
    bool passed(std::string_view id) const;  // throws if id is absent
    const AxiomCheck& at(std::string_view id) const;
    const std::vector<AxiomCheck>& checks() const noexcept { return checks_; }
    std::vector<std::string> failures() const;

private:
    std::vector<AxiomCheck> checks_;
};

struct EquationResult {
    std::string id;
    bool passed;
    Witness witness;
};

// Shared by coactions and actions. `is_global` is the comodule algebra
// (resp. module algebra) flag.
struct ClassificationVerdict {
    bool is_global = false;
    bool is_weak = false;
    bool is_lax = false;
    bool is_partial = false;
    std::map<std::string, bool> equations;
    std::map<std::string, Witness> witnesses;

    bool all_of(const std::vector<std::string>& ids) const;
};

}  // namespace hpa
