#ifndef LBDIV_LBDIV_H_
#define LBDIV_LBDIV_H_

#include "lbdiv/aggregation.h"
#include "lbdiv/clustering.h"
#include "lbdiv/divergence.h"
#include "lbdiv/error.h"
#include "lbdiv/mallows.h"
#include "lbdiv/matrix.h"
#include "lbdiv/permutation.h"
#include "lbdiv/ranking_measures.h"
#include "lbdiv/set_function.h"

#endif  // LBDIV_LBDIV_H_
