#pragma once

#include <stdexcept>
#include <string>

namespace atkin {

/// Raised when a computed object contradicts a proven identity (for example
/// F^2 != t^k I, or a kernel vector that is not annihilated). Such a failure
/// means the computation is wrong, not that a conjecture failed.
class InternalDefect : public std::logic_error {
public:
    explicit InternalDefect(const std::string& what) : std::logic_error("internal defect: " + what) {}
};

}  // namespace atkin
