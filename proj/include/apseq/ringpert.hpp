#pragma once

#include "apseq/ringpert/exact_matrix.hpp"
#include "apseq/ringpert/nilpotent.hpp"
#include "apseq/ringpert/perturbation.hpp"
#include "apseq/ringpert/ring.hpp"
