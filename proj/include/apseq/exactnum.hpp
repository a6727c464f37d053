#pragma once

#include "apseq/exactnum/bigint.hpp"
#include "apseq/exactnum/combinatorics.hpp"
#include "apseq/exactnum/gaussian_rational.hpp"
#include "apseq/exactnum/rational.hpp"
