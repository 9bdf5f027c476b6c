// Copyright 2026 The gvdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GVDT_GVDT_HPP
#define GVDT_GVDT_HPP

#include "gvdt/curve_class.hpp"
#include "gvdt/datasets.hpp"
#include "gvdt/invariants.hpp"
#include "gvdt/kkv.hpp"
#include "gvdt/lambda.hpp"
#include "gvdt/multiseries.hpp"
#include "gvdt/partitions.hpp"
#include "gvdt/qlaurent.hpp"
#include "gvdt/rational.hpp"
#include "gvdt/series_io.hpp"
#include "gvdt/tables.hpp"

#endif  // GVDT_GVDT_HPP
