#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace modmat {

// Exception carrying a stable machine-readable kind tag next to the message.
// The kind strings are part of the CLI/JSON contract.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace modmat
