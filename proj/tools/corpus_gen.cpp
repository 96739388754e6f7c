// Copyright (c) 2026, The semnet Authors. All rights reserved.
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

// Regenerates the shipped corpus: one .semnet file per builder and one golden
// machine report per (file, direction, mode).
//
//   semnet-corpus <corpus-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semnet/cli.hpp"
#include "semnet/corpus.hpp"
#include "semnet/semnet_format.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: semnet-corpus <corpus-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir / "golden");
  for (const auto& entry : semnet::corpus::entries()) {
    const fs::path file = dir / entry.file;
    std::ofstream(file, std::ios::binary) << semnet::serialize(entry.network);
    for (const std::string direction : {"forward", "backward"}) {
      for (const std::string mode : {"projected", "full"}) {
        std::ostringstream out, err;
        const int code = semnet::cli::run(
            {"check", file.string(), "--property", "all", "--direction", direction, "--mode", mode, "--json"}, out, err);
        if (code > 1) {
          std::cerr << file << ": exit " << code << "\n" << err.str();
          return code;
        }
        const fs::path golden = dir / "golden" / (file.stem().string() + "." + direction + "." + mode + ".json");
        std::ofstream(golden, std::ios::binary) << out.str();
      }
    }
    std::cout << "wrote " << file.string() << "\n";
  }
  return 0;
}
