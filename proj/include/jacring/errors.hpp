#pragma once

#include <stdexcept>

namespace jacring {

// Malformed or inhomogeneous form text.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation required a ring whose smoothness certificate holds (or a
// random search exhausted its attempts without finding a smooth form).
struct smoothness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured safety cap (for example on the socle degree) was exceeded.
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jacring
