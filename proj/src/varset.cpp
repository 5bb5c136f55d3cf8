#include "ybe/varset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybe {

VarSetPtr VarSet::make(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate variable name: " + names[i]);
    return VarSetPtr(new VarSet(std::move(names)));
}

std::size_t VarSet::index(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return i;
    throw std::out_of_range("unregistered variable: " + n);
}

bool VarSet::contains(const std::string& n) const {
    return std::find(names_.begin(), names_.end(), n) != names_.end();
}

VarSetPtr VarSet::extend(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    for (const auto& n : extra)
        if (!contains(n)) all.push_back(n);
    return make(std::move(all));
}

} // namespace ybe
