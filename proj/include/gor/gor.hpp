#pragma once

#include "gor/algebra.hpp"
#include "gor/artinian.hpp"
#include "gor/constructions.hpp"
#include "gor/corpus.hpp"
#include "gor/error.hpp"
#include "gor/field.hpp"
#include "gor/grading.hpp"
#include "gor/groebner.hpp"
#include "gor/homology.hpp"
#include "gor/ideal_file.hpp"
#include "gor/idealization.hpp"
#include "gor/polynomial.hpp"
#include "gor/report.hpp"
#include "gor/series.hpp"
#include "gor/sparse.hpp"
