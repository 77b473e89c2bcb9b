// SPDX-License-Identifier: Apache-2.0
//
// midhaul: planning simulator for 140 GHz wireless midhaul transport links
// Copyright (C) 2026 The midhaul authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIDHAUL_MIDHAUL_HPP
#define MIDHAUL_MIDHAUL_HPP

#include "midhaul/arrays.hpp"
#include "midhaul/channel.hpp"
#include "midhaul/config.hpp"
#include "midhaul/geometry.hpp"
#include "midhaul/mimo.hpp"
#include "midhaul/planner.hpp"
#include "midhaul/propagation.hpp"
#include "midhaul/report.hpp"
#include "midhaul/scene.hpp"
#include "midhaul/trace.hpp"
#include "midhaul/units.hpp"

#endif
