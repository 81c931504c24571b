#pragma once

#include <stdexcept>
#include <string>

namespace voltlab {

// Bad flags, bad config files, missing inputs. The CLI maps this to exit 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace voltlab
