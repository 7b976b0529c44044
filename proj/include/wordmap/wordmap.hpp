#ifndef WORDMAP_WORDMAP_HPP
#define WORDMAP_WORDMAP_HPP

#include "wordmap/version.hpp"
#include "wordmap/rational.hpp"
#include "wordmap/word.hpp"
#include "wordmap/polynomial.hpp"
#include "wordmap/poly_parse.hpp"
#include "wordmap/sturm.hpp"
#include "wordmap/trace_algebra.hpp"
#include "wordmap/groebner.hpp"
#include "wordmap/su2_certificate.hpp"
#include "wordmap/numeric.hpp"
#include "wordmap/sl2_report.hpp"

#endif  // WORDMAP_WORDMAP_HPP
