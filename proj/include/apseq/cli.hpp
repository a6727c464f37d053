#pragma once

#include "apseq/cli/codec.hpp"
#include "apseq/cli/commands.hpp"
#include "apseq/cli/inputs.hpp"
