#pragma once

#include "fuchs/angle_spectrum.hpp"
#include "fuchs/axes.hpp"
#include "fuchs/ball.hpp"
#include "fuchs/conjclass.hpp"
#include "fuchs/dirichlet.hpp"
#include "fuchs/errors.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/halfplane.hpp"
#include "fuchs/isometry.hpp"
#include "fuchs/parallel.hpp"
#include "fuchs/representation.hpp"
#include "fuchs/spectrum.hpp"
#include "fuchs/sweep.hpp"
#include "fuchs/twist.hpp"
#include "fuchs/version.hpp"
#include "fuchs/word.hpp"
