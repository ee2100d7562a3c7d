#pragma once

#include "projgraft/complex.hpp"
#include "projgraft/config_json.hpp"
#include "projgraft/errors.hpp"
#include "projgraft/oracle.hpp"
#include "projgraft/suites.hpp"
#include "projgraft/surface.hpp"
#include "projgraft/torus.hpp"
