#pragma once

#include "cnotkit/catalog.hpp"
#include "cnotkit/dynamics.hpp"
#include "cnotkit/eigensystem.hpp"
#include "cnotkit/matrix.hpp"
#include "cnotkit/pauli.hpp"
#include "cnotkit/pulse.hpp"
#include "cnotkit/similarity.hpp"
#include "cnotkit/synthesis.hpp"
