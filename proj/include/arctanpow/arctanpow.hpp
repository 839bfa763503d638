#pragma once

#include "arctanpow/algebra/bigfloat.hpp"
#include "arctanpow/algebra/digamma.hpp"
#include "arctanpow/algebra/poly.hpp"
#include "arctanpow/algebra/rational.hpp"
#include "arctanpow/coeffs/coeff_table.hpp"
#include "arctanpow/coeffs/coeffs.hpp"
#include "arctanpow/coeffs/export.hpp"
#include "arctanpow/combinatorics/combinatorics.hpp"
#include "arctanpow/combinatorics/export.hpp"
#include "arctanpow/errors.hpp"
#include "arctanpow/identities/identities.hpp"
#include "arctanpow/identities/verify_report.hpp"
#include "arctanpow/series/formal_series.hpp"
#include "arctanpow/series/report.hpp"
#include "arctanpow/series/series.hpp"
