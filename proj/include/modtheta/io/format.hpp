#pragma once

#include <cstdio>
#include <string>

#include "modtheta/numeric.hpp"

namespace modtheta {

/// Round-trip decimal rendering ("%.17g"), "." separator, negative zero printed as 0.
inline std::string format_double(double x) {
    if (x == 0.0) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// "re+imi" / "re-imi".
inline std::string format_complex(Complex z) {
    std::string out = format_double(z.real());
    const double im = z.imag();
    if (im < 0.0) {
        out += "-" + format_double(-im);
    } else {
        out += "+" + format_double(im);
    }
    return out + "i";
}

}  // namespace modtheta
