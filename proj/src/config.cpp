/*
 * config.cpp
 */

#include <algorithm>
#include <cmath>
#include <thread>

#include "groupcent/report.hpp"

namespace groupcent {

void AlgoConfig::validate() const {
    if (k < 1)
        throw InputError("k must be at least 1");
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw InputError("eps must be positive");
    if (trials < 1)
        throw InputError("trials must be at least 1");
    if (p < 1)
        throw InputError("p must be at least 1");
}

unsigned AlgoConfig::effective_workers() const {
    if (deterministic)
        return 1;
    if (workers > 0)
        return workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace groupcent
