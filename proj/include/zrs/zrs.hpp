#pragma once

#include "zrs/errors.hpp"
#include "zrs/tolerance.hpp"
#include "zrs/pauli.hpp"
#include "zrs/interaction.hpp"
#include "zrs/smatrix.hpp"
#include "zrs/metric.hpp"
#include "zrs/classifier.hpp"
#include "zrs/resolvent.hpp"
#include "zrs/io.hpp"
#include "zrs/sweep.hpp"
