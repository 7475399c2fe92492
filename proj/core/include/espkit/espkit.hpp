// Copyright 2026 The espkit Authors
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

#pragma once

#include "espkit/analysis.hpp"
#include "espkit/densemat.hpp"
#include "espkit/dynamics.hpp"
#include "espkit/errors.hpp"
#include "espkit/hilbert.hpp"
#include "espkit/model.hpp"
#include "espkit/monotones.hpp"
#include "espkit/parallel.hpp"
#include "espkit/states.hpp"
