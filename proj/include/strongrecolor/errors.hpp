#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strongrecolor {

// Thrown when an operation would have to visit more than `cap` raw candidates
// (k^n for full enumerations, visited states for implicit searches).
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error("candidate space " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

// Thrown by validate_schedule; carries the index of the first bad step.
// step_index == 0 with a "start" reason means the start colouring itself is invalid.
class ScheduleError : public std::runtime_error {
public:
    ScheduleError(std::size_t step_index, const std::string& reason)
        : std::runtime_error("schedule invalid at step " + std::to_string(step_index) +
                             ": " + reason),
          step_index_(step_index), reason_(reason) {}

    std::size_t step_index() const { return step_index_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t step_index_;
    std::string reason_;
};

} // namespace strongrecolor
