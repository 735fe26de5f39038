#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

// Runs `args` through the shell with the CLI binary prepended; stderr is
// folded into the captured output.
inline ProcessResult run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + POSETCODES_CLI + "' " + args + " 2>&1";
  ProcessResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
