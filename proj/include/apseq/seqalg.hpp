#pragma once

#include "apseq/seqalg/diagonal.hpp"
#include "apseq/seqalg/polynomial.hpp"
#include "apseq/seqalg/transforms.hpp"
