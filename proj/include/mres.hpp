#pragma once

// Everything in one include.

#include "mres/betti.hpp"
#include "mres/catalog.hpp"
#include "mres/errors.hpp"
#include "mres/examples.hpp"
#include "mres/free_complex.hpp"
#include "mres/io.hpp"
#include "mres/laurent.hpp"
#include "mres/lattice.hpp"
#include "mres/leibniz.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/morse.hpp"
#include "mres/multidegree.hpp"
#include "mres/multiplication.hpp"
#include "mres/resolution.hpp"
#include "mres/scalar.hpp"
#include "mres/simplicial.hpp"
#include "mres/structure.hpp"
#include "mres/taylor.hpp"
