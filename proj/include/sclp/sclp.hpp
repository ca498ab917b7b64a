#ifndef SCLP_SCLP_HPP
#define SCLP_SCLP_HPP

#include "sclp/catalog.hpp"
#include "sclp/error.hpp"
#include "sclp/fixpoint.hpp"
#include "sclp/interpretation.hpp"
#include "sclp/operators.hpp"
#include "sclp/order.hpp"
#include "sclp/program.hpp"
#include "sclp/semantics.hpp"
#include "sclp/semiring.hpp"
#include "sclp/value.hpp"

#endif  // SCLP_SCLP_HPP
