#ifndef THUE_MAHLER_HPP
#define THUE_MAHLER_HPP

#include "thue_mahler/numeric.hpp"
#include "thue_mahler/homogeneous_poly.hpp"
#include "thue_mahler/forms.hpp"
#include "thue_mahler/curves.hpp"
#include "thue_mahler/descent.hpp"
#include "thue_mahler/roots.hpp"
#include "thue_mahler/primes.hpp"
#include "thue_mahler/solver.hpp"
#include "thue_mahler/oracle.hpp"
#include "thue_mahler/stats.hpp"
#include "thue_mahler/report.hpp"

#endif  // THUE_MAHLER_HPP
