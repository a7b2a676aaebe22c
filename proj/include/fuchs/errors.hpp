#pragma once

#include <stdexcept>
#include <string>

namespace fuchs {

struct not_hyperbolic : std::runtime_error {
    explicit not_hyperbolic(const std::string& what) : std::runtime_error(what) {}
};

struct shared_endpoint : std::runtime_error {
    explicit shared_endpoint(const std::string& what) : std::runtime_error(what) {}
};

struct no_crossing : std::runtime_error {
    explicit no_crossing(const std::string& what) : std::runtime_error(what) {}
};

struct axes_disjoint : std::runtime_error {
    explicit axes_disjoint(const std::string& what) : std::runtime_error(what) {}
};

struct depth_cap_exceeded : std::runtime_error {
    explicit depth_cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct unknown_preset : std::runtime_error {
    explicit unknown_preset(const std::string& what) : std::runtime_error(what) {}
};

struct not_separated : std::runtime_error {
    explicit not_separated(const std::string& what) : std::runtime_error(what) {}
};

struct no_crossing_at_base : std::runtime_error {
    explicit no_crossing_at_base(const std::string& what) : std::runtime_error(what) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fuchs
