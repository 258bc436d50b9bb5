#pragma once

#include <stdexcept>
#include <string>

namespace ucat {

// A configured resource limit was hit; parameter() names the limit.
class budget_error : public std::runtime_error {
public:
    budget_error(std::string parameter, const std::string& message)
        : std::runtime_error(message), parameter_(std::move(parameter)) {}
    const std::string& parameter() const { return parameter_; }

private:
    std::string parameter_;
};

}  // namespace ucat
