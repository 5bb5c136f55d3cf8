#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ybe {

// Immutable registry of commuting variable names. Polynomials store dense
// exponent vectors whose arity equals the registry size, so every value built
// over the same registry agrees on variable identity. Registries never mutate;
// extend() returns a fresh superset registry.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // index of a registered name; throws if absent
    std::size_t index(const std::string& n) const;
    bool contains(const std::string& n) const;

    std::shared_ptr<const VarSet> extend(const std::vector<std::string>& extra) const;

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

} // namespace ybe
