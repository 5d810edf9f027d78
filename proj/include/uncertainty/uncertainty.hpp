// Copyright 2026 The Uncertainty Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "uncertainty/error.hpp"
#include "uncertainty/goldens.hpp"
#include "uncertainty/matrix_core.hpp"
#include "uncertainty/relations.hpp"
#include "uncertainty/report.hpp"
#include "uncertainty/sampling.hpp"
#include "uncertainty/saturation.hpp"
#include "uncertainty/states.hpp"
