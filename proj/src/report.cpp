#include "hpa/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpa {

void AxiomReport::add(std::string id, std::optional<Witness> violation, std::string note) {
    AxiomCheck c{std::move(id), !violation.has_value(), {}, std::move(note)};
    if (violation) c.witness = std::move(*violation);
    checks_.push_back(std::move(c));
}

void AxiomReport::add_flag(std::string id, bool passed, std::string note) {
    checks_.push_back({std::move(id), passed, {}, std::move(note)});
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
    for (auto c : other.checks_) {
        c.id = prefix + c.id;
        checks_.push_back(std::move(c));
    }
}

bool AxiomReport::all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const AxiomCheck& c) { return c.passed; });
}

bool AxiomReport::has(std::string_view id) const {
    return std::any_of(checks_.begin(), checks_.end(), [&](const AxiomCheck& c) { return c.id == id; });
}

const AxiomCheck& AxiomReport::at(std::string_view id) const {
    for (const auto& c : checks_)
        if (c.id == id) return c;
    throw std::out_of_range("no check named '" + std::string(id) + "' in report");
}

bool AxiomReport::passed(std::string_view id) const { return at(id).passed; }

std::vector<std::string> AxiomReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
        if (!c.passed) out.push_back(c.id);
    return out;
}

bool ClassificationVerdict::all_of(const std::vector<std::string>& ids) const {
    return std::all_of(ids.begin(), ids.end(), [&](const std::string& id) {
        auto it = equations.find(id);
        return it != equations.end() && it->second;
    });
}

}  // namespace hpa
