#pragma once

#include "apseq/isometry/check.hpp"
#include "apseq/isometry/metric.hpp"
#include "apseq/isometry/system.hpp"
#include "apseq/isometry/theorems.hpp"
