#pragma once

#include "pdnet/cluster.hpp"
#include "pdnet/errors.hpp"
#include "pdnet/gaussian.hpp"
#include "pdnet/io.hpp"
#include "pdnet/jacobi.hpp"
#include "pdnet/linalg.hpp"
#include "pdnet/matrix.hpp"
#include "pdnet/network.hpp"
#include "pdnet/quiver.hpp"
#include "pdnet/rational.hpp"
#include "pdnet/verdict.hpp"
#include "pdnet/wiring.hpp"
