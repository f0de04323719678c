#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "lozenge/lozenge.h"

namespace {

constexpr int kExitInput = 4;

// Report for failures that happen before a command can run.
int early_failure(const std::string& command, lz_status status, const std::string& message) {
  std::printf("lozenge-report 1\ncommand: %s\nerror.code: %s\nerror.message: %s\nstatus: failed\nexit: %d\n",
              command.c_str(), lz_status_name(status), message.c_str(), kExitInput);
  return kExitInput;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lozenge chains, linking and co-cylindrical orbits for Fuchsian surface groups"};
  app.require_subcommand(0, 0);

  std::string command;
  std::string word;
  std::string group;
  std::string config_path;
  std::string out_dir;
  std::string cache_dir;
  int depth = -1;
  int partner_range = -1;
  int n = 0;
  double tolerance = 0.0;
  bool render = false;
  bool timings = false;

  app.add_option("command", command, "info | classify | chain | annulus | cocyl | render")
      ->required()
      ->check(CLI::IsMember({"info", "classify", "chain", "annulus", "cocyl", "render"}));
  app.add_option("word", word, "group element as a word in a, b, ... (upper case for inverses)");
  app.add_option("--group", group, "built-in group: modular-torus or octagon-genus2");
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--depth", depth, "enumeration depth for every search")->check(CLI::NonNegativeNumber);
  app.add_option("--partner-range", partner_range, "largest chain length n tested for partners")
      ->check(CLI::PositiveNumber);
  app.add_option("--n", n, "number of lozenges in rendered or listed chains")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", tolerance, "geometric tolerance eps")->check(CLI::PositiveNumber);
  app.add_flag("--render", render, "also write SVG and CSV figures");
  app.add_option("--out", out_dir, "directory for report, SVG and CSV files");
  app.add_option("--cache-dir", cache_dir, "enumeration cache directory (overrides LOZENGE_CACHE_DIR)");
  app.add_flag("--timings", timings, "append wall-clock timing to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  lz_session* session = nullptr;
  lz_status st = config_path.empty() ? lz_session_create(group.empty() ? "modular-torus" : group.c_str(), &session)
                                     : lz_session_from_config_file(config_path.c_str(), &session);
  if (st != LZ_OK) return early_failure(command, st, lz_last_error());
  if (!config_path.empty() && !group.empty()) st = lz_session_set_group(session, group.c_str());
  if (st == LZ_OK && depth >= 0) st = lz_session_set_depths(session, depth, depth, depth);
  if (st == LZ_OK && partner_range > 0) st = lz_session_set_partner_range(session, partner_range);
  if (st == LZ_OK && tolerance > 0.0) st = lz_session_set_tolerance(session, tolerance);
  if (st == LZ_OK && !cache_dir.empty()) st = lz_session_set_cache_dir(session, cache_dir.c_str());
  if (st != LZ_OK) {
    const std::string message = lz_last_error();
    lz_session_destroy(session);
    return early_failure(command, st, message);
  }

  lz_result* result = nullptr;
  st = lz_run(session, command.c_str(), word.empty() ? nullptr : word.c_str(), n, render ? 1 : 0, timings ? 1 : 0,
              &result);
  lz_session_destroy(session);
  if (st != LZ_OK) return early_failure(command, st, lz_last_error());

  const int code = lz_result_exit_code(result);
  std::fputs(lz_result_report(result), stdout);

  const char* svg = lz_result_svg(result);
  const char* csv = lz_result_csv(result);
  if (!out_dir.empty() || svg != nullptr) {
    const std::string dir = out_dir.empty() ? "." : out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string stem = dir + "/" + command + (word.empty() ? "" : "-" + word);
    bool ok = !ec && write_file(stem + ".report", lz_result_report(result));
    if (svg) ok = ok && write_file(stem + ".svg", svg);
    if (csv) ok = ok && write_file(stem + ".csv", csv);
    if (!ok) {
      std::fprintf(stderr, "lozenge: cannot write output files under '%s'\n", dir.c_str());
      lz_result_destroy(result);
      return kExitInput;
    }
  }
  lz_result_destroy(result);
  return code;
}
