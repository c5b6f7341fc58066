#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdm {

using Q = mpq_class;

// "p/q" with q > 0, always including the denominator.
std::string to_string(const Q& x);

// Accepts "p", "p/q" and plain decimals like "-0.125".
Q parse_rational(std::string_view s);

inline double to_double(const Q& x) { return x.get_d(); }

inline Q make_q(long p, long q = 1) {
    Q r(p, q);
    r.canonicalize();
    return r;
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hdm
