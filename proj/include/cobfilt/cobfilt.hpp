#pragma once

#include "algebra_spec.hpp"
#include "degree_codec.hpp"
#include "error.hpp"
#include "manifold_planner.hpp"
#include "series.hpp"
#include "spectral_model.hpp"
#include "verify.hpp"
