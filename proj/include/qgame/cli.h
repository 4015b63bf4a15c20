// Copyright 2026 The qgame Authors
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

// Command-line front end: reproduce, advantage, scan, optimize, witness.

#ifndef QGAME_CLI_H_
#define QGAME_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReproduceFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotEquilibrium = 3;

// Float rows of `reproduce` are never checked tighter than this.
inline constexpr double kReproduceFloatFloor = 1e-12;

// `args` excludes the program name. Output is a pure function of the
// arguments (and input files), independent of thread count.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace qgame

#endif  // QGAME_CLI_H_
