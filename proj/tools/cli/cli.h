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

// The readgauge command line, callable in-process so tests can drive it.

#ifndef READGAUGE_TOOLS_CLI_CLI_H_
#define READGAUGE_TOOLS_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace readgauge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr const char *kLexiconDirEnv = "READGAUGE_LEXICON_DIR";

// args excludes the program name. Input "-" reads from in.
int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace readgauge::cli

#endif  // READGAUGE_TOOLS_CLI_CLI_H_
