// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mcwave Authors
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

#pragma once

#include "mcwave/cdid.hpp"
#include "mcwave/channel.hpp"
#include "mcwave/equalization.hpp"
#include "mcwave/errors.hpp"
#include "mcwave/fixtures.hpp"
#include "mcwave/framing.hpp"
#include "mcwave/harness.hpp"
#include "mcwave/mapping.hpp"
#include "mcwave/metrics.hpp"
#include "mcwave/modems.hpp"
#include "mcwave/numerics.hpp"
#include "mcwave/pulse.hpp"
#include "mcwave/random.hpp"
#include "mcwave/version.hpp"
