#include "simpconf/errors.hpp"

#include <cstdlib>

namespace simpconf {

std::size_t max_simplex_budget() {
    static const std::size_t budget = [] {
        const char* env = std::getenv("SIMPCONF_MAX_SIMPLICES");
        if (env && *env) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(5'000'000);
    }();
    return budget;
}

void check_budget(std::size_t count, const char* what) {
    if (count > max_simplex_budget())
        throw BudgetError(std::string(what) + " exceeds the simplex budget of " +
                          std::to_string(max_simplex_budget()) +
                          " (set SIMPCONF_MAX_SIMPLICES to raise it)");
}

}  // namespace simpconf
