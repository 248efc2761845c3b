#pragma once

// Exact coefficient arithmetic: big rationals, rational-exponent Laurent
// polynomials, reduced rational functions and q-numbers.

#include "gieseker/qnumbers.hpp"
#include "gieseker/qpoly.hpp"
#include "gieseker/ratfun.hpp"
#include "gieseker/rational.hpp"
