#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace torsionlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace torsionlab
