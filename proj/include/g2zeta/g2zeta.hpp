#ifndef G2ZETA_G2ZETA_HPP
#define G2ZETA_G2ZETA_HPP

#include <g2zeta/affine_expression.hpp>
#include <g2zeta/bernoulli.hpp>
#include <g2zeta/bernoulli_g2.hpp>
#include <g2zeta/errors.hpp>
#include <g2zeta/generating_function.hpp>
#include <g2zeta/numeric.hpp>
#include <g2zeta/pi_value.hpp>
#include <g2zeta/rational.hpp>
#include <g2zeta/relations.hpp>
#include <g2zeta/root_system.hpp>
#include <g2zeta/series.hpp>

#endif
