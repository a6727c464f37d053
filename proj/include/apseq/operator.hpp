#pragma once

#include "apseq/operator/isometry.hpp"
#include "apseq/operator/perturbation.hpp"
