#ifndef SIMPLAP_SIMPLAP_HPP
#define SIMPLAP_SIMPLAP_HPP

#include "simplap/bounds.hpp"
#include "simplap/combinatorics.hpp"
#include "simplap/complex.hpp"
#include "simplap/constructions.hpp"
#include "simplap/homology.hpp"
#include "simplap/io.hpp"
#include "simplap/matrix.hpp"
#include "simplap/operators.hpp"
#include "simplap/rational.hpp"
#include "simplap/rng.hpp"
#include "simplap/spectra.hpp"
#include "simplap/verify.hpp"
#include "simplap/weighted.hpp"

#endif  // SIMPLAP_SIMPLAP_HPP
