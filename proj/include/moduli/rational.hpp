#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "moduli/errors.hpp"

namespace moduli {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders "p/q" in lowest terms; integral values render without the "/q".
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else or q = 0.
Rat rat_from_string(const std::string& text);

} // namespace moduli
