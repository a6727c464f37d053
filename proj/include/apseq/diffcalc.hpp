#pragma once

#include "apseq/diffcalc/difference.hpp"
#include "apseq/diffcalc/element.hpp"
#include "apseq/diffcalc/forms.hpp"
#include "apseq/diffcalc/order.hpp"
#include "apseq/diffcalc/sequence.hpp"
