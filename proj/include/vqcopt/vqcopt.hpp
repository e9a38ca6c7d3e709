#pragma once

#include "vqcopt/circuit.hpp"
#include "vqcopt/experiment.hpp"
#include "vqcopt/gate_params.hpp"
#include "vqcopt/hamiltonians.hpp"
#include "vqcopt/jacobi.hpp"
#include "vqcopt/matrix2.hpp"
#include "vqcopt/optimizers.hpp"
#include "vqcopt/pauli.hpp"
#include "vqcopt/rng.hpp"
#include "vqcopt/serialize.hpp"
#include "vqcopt/statevector.hpp"
