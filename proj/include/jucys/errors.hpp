#pragma once

#include <stdexcept>
#include <string>

namespace jucys {

// Enumeration-scale guard tripped (n beyond the configured limit, etc).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient-ring pole was hit (1 - c z = 0 for some content, singular
// hypergeometric factor, rational-function evaluation at a root, ...).
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jucys
