#pragma once

#include "hamfact/canonicalizer.hpp"
#include "hamfact/demos.hpp"
#include "hamfact/dynamics.hpp"
#include "hamfact/errors.hpp"
#include "hamfact/factorization.hpp"
#include "hamfact/frobenius.hpp"
#include "hamfact/matrix.hpp"
#include "hamfact/multipoly.hpp"
#include "hamfact/parser.hpp"
#include "hamfact/potential.hpp"
#include "hamfact/rational.hpp"
#include "hamfact/reduction.hpp"
#include "hamfact/report.hpp"
#include "hamfact/symmetric_solve.hpp"
#include "hamfact/unipoly.hpp"
