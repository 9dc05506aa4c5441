/*
   Copyright 2026 The p1series Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef P1SERIES_P1_HPP
#define P1SERIES_P1_HPP

#include "p1/cache.hpp"
#include "p1/coefficient_table.hpp"
#include "p1/elliptic.hpp"
#include "p1/errors.hpp"
#include "p1/laurent.hpp"
#include "p1/mp.hpp"
#include "p1/pole_locator.hpp"
#include "p1/quadrature.hpp"
#include "p1/rational.hpp"
#include "p1/roots.hpp"
#include "p1/series.hpp"
#include "p1/tau.hpp"
#include "p1/verify.hpp"
#include "p1/weighted_poly.hpp"

#endif
