// Copyright 2026 The dualgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// Umbrella header: the whole library in one include.

#ifndef DUALGAME_DUALGAME_HPP
#define DUALGAME_DUALGAME_HPP

#include "dualgame/common.hpp"
#include "dualgame/game.hpp"
#include "dualgame/info.hpp"
#include "dualgame/measure.hpp"
#include "dualgame/presets.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/rng.hpp"
#include "dualgame/scenario_io.hpp"
#include "dualgame/states.hpp"
#include "dualgame/version.hpp"

#endif  // DUALGAME_DUALGAME_HPP
