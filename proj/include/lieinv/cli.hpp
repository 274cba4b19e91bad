#pragma once

// placeholder until the command-line surface lands
namespace lieinv::cli {
inline int run(int, char**) { return 0; }
}  // namespace lieinv::cli
