#pragma once

#include "apseq/powerclass/classify.hpp"
#include "apseq/powerclass/laws.hpp"
#include "apseq/powerclass/positive.hpp"
