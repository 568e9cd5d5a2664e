#pragma once

#include <stdexcept>
#include <string>

namespace skewsign {

// An enumeration would exceed its configured size cap. The message names the
// offending count and the cap so callers can decide whether to raise it.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what_kind, long long count, long long cap)
        : std::runtime_error(what_kind + " count " + std::to_string(count) +
                             " exceeds cap " + std::to_string(cap)),
          count_(count),
          cap_(cap) {}
    long long count() const { return count_; }
    long long cap() const { return cap_; }

private:
    long long count_;
    long long cap_;
};

}  // namespace skewsign
