// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_CAPACITY_HPP
#define CAPACITY_CAPACITY_HPP

#include "capacity/budget.hpp"
#include "capacity/combinat.hpp"
#include "capacity/error.hpp"
#include "capacity/ffmat.hpp"
#include "capacity/fracchrom.hpp"
#include "capacity/generators.hpp"
#include "capacity/graph.hpp"
#include "capacity/graph_expr.hpp"
#include "capacity/haemers.hpp"
#include "capacity/hfrac.hpp"
#include "capacity/json_io.hpp"
#include "capacity/rational.hpp"
#include "capacity/report.hpp"
#include "capacity/reproduce.hpp"
#include "capacity/simplex.hpp"
#include "capacity/theta.hpp"

#endif  // CAPACITY_CAPACITY_HPP
