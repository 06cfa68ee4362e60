#pragma once

#include "clutterlab/chordality.hpp"
#include "clutterlab/clutter.hpp"
#include "clutterlab/homology.hpp"
#include "clutterlab/integer.hpp"
#include "clutterlab/invariants.hpp"
#include "clutterlab/io.hpp"
#include "clutterlab/macaulay.hpp"
#include "clutterlab/polynomial.hpp"
#include "clutterlab/report.hpp"
