#ifndef NRAD_NRAD_HPP
#define NRAD_NRAD_HPP

#include "nrad/errors.hpp"
#include "nrad/linalg.hpp"
#include "nrad/random.hpp"
#include "nrad/radius.hpp"
#include "nrad/bounds.hpp"
#include "nrad/io.hpp"
#include "nrad/ensemble.hpp"

#endif // NRAD_NRAD_HPP
