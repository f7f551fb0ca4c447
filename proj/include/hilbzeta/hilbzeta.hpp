#ifndef HILBZETA_HILBZETA_HPP
#define HILBZETA_HILBZETA_HPP

#include <hilbzeta/error.hpp>
#include <hilbzeta/l_polynomial.hpp>
#include <hilbzeta/motive.hpp>
#include <hilbzeta/oracle.hpp>
#include <hilbzeta/semigroup.hpp>
#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

#endif
