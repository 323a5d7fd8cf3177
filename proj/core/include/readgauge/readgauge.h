// Copyright 2026 The ReadGauge Authors.
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

#ifndef READGAUGE_READGAUGE_H_
#define READGAUGE_READGAUGE_H_

#include "readgauge/calibration.h"
#include "readgauge/delimited.h"
#include "readgauge/error.h"
#include "readgauge/evaluation.h"
#include "readgauge/formulas.h"
#include "readgauge/lexicon.h"
#include "readgauge/nerf.h"
#include "readgauge/syntax.h"
#include "readgauge/text.h"

#endif  // READGAUGE_READGAUGE_H_
