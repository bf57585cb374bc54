#pragma once
#include "errors.hpp"
#include "intpoly.hpp"
#include "fppoly.hpp"
#include "zfactor.hpp"
#include "reciprocal.hpp"
#include "linalg.hpp"
#include "residues.hpp"
#include "distributions.hpp"
#include "hyperoct.hpp"
#include "galois.hpp"
#include "experiment.hpp"
#include "verify.hpp"
