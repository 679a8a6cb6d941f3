#pragma once

#include "cbn/error.hpp"
#include "cbn/words.hpp"
#include "cbn/permutation.hpp"
#include "cbn/morphisms.hpp"
#include "cbn/gword.hpp"
#include "cbn/realize.hpp"
#include "cbn/templates.hpp"
#include "cbn/presentations.hpp"
#include "cbn/normalform.hpp"
#include "cbn/lpoly.hpp"
#include "cbn/matrix.hpp"
#include "cbn/serialize.hpp"
#include "cbn/reps.hpp"
#include "cbn/induced.hpp"
#include "cbn/acceptance.hpp"
