#pragma once

// Weighted-sieve bounds for almost-prime polynomial values at prime
// arguments: analytic constants and explicit beta-sieve functions, the
// closed-form bound optimizer, polynomial local densities, and desk-scale
// empirical verification over dyadic prime ranges.

#include "sievebound/bound_optimizer.hpp"
#include "sievebound/densities.hpp"
#include "sievebound/empirical.hpp"
#include "sievebound/errors.hpp"
#include "sievebound/factorization.hpp"
#include "sievebound/irreducibility.hpp"
#include "sievebound/polynomial.hpp"
#include "sievebound/primes.hpp"
#include "sievebound/quadrature.hpp"
#include "sievebound/report_io.hpp"
#include "sievebound/sieve_functions.hpp"
