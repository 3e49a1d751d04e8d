#ifndef IDALG_IDALG_HPP
#define IDALG_IDALG_HPP

#include "binomial.hpp"
#include "errors.hpp"
#include "hasse.hpp"
#include "idmod.hpp"
#include "mahler.hpp"
#include "matrix.hpp"
#include "parser.hpp"
#include "poly.hpp"
#include "prime_field.hpp"
#include "ratfun.hpp"
#include "rational.hpp"
#include "relations.hpp"
#include "series.hpp"

#endif
