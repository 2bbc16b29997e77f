#pragma once

// Umbrella header: exact analysis of cubic polynomials with cyclic Galois
// group. Certification, root-permuting quadratics, coupled polynomials,
// linear-equivalence classes, and the phi/psi superclass dynamics.

#include "cycubic/errors.hpp"
#include "cycubic/rational.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/parse.hpp"
#include "cycubic/galois.hpp"
#include "cycubic/classes.hpp"
#include "cycubic/dynamics.hpp"
#include "cycubic/field.hpp"
