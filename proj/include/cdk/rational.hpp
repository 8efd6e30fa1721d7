#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cdk {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, sign on the numerator.
using Rat = mpq_class;

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
// or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace cdk
