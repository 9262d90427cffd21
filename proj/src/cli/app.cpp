#include <chrono>
#include <ctime>
#include <iostream>

#include "commands.hpp"

namespace painlab::cli {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string option_key(const CLI::Option* opt) {
  return opt->get_single_name();
}

// Resolved values of every option of `app`: parsed results when given,
// captured defaults otherwise.
json resolved_options(const CLI::App* app) {
  json j = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    const std::string key = option_key(opt);
    if (key == "help" || key == "config" || key == "version") continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_type_size() == 0)
        j[key] = true;
      else if (res.size() == 1 && opt->get_expected_max() <= 1)
        j[key] = res.front();
      else
        j[key] = res;
    } else if (opt->get_type_size() == 0) {
      j[key] = false;
    } else {
      j[key] = opt->get_default_str();
    }
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"painlab: numerical experiments around the quantum Painleve II equation"};
  app.set_version_flag("--version", PAINLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "key=value configuration file; explicit flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string format = "csv";
  bool gnuplot = false;
  app.add_option("--out-dir", out_dir, "directory for data files and manifest.json");
  app.add_option("--seed", seed, "seed for randomized sampling");
  app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--gnuplot", gnuplot, "also write a gnuplot script for every CSV");

  auto commands = register_commands(app);

  std::string plot_csv;
  std::string plot_kind = "auto";
  auto* plot = app.add_subcommand(
      "gnuplot", "Write a gnuplot script for a CSV produced by one of the other subcommands");
  plot->add_option("csv", plot_csv, "CSV file")->required();
  plot->add_option("--kind", plot_kind,
                   "auto, potential, error, residual, trajectory or comparison");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    sub->configurable();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    if (plot->parsed()) {
      const auto script = emit_gnuplot(plot_csv, parse_plot_kind(plot_kind));
      out << script.string() << '\n';
      return kOk;
    }

    const Command* selected = nullptr;
    for (const auto& c : commands)
      if (c.app->parsed()) selected = &c;

    RunContext ctx;
    ctx.seed = seed;
    ctx.format = format == "json" ? Format::json : Format::csv;
    json manifest;
    manifest["config"] = {{"subcommand", selected->app->get_name()},
                          {"global", resolved_options(&app)},
                          {"parameters", resolved_options(selected->app)}};
    manifest["version"] = PAINLAB_VERSION;
    manifest["started_at"] = utc_now();
    manifest["seed"] = seed;

    const auto artifacts = selected->handler(ctx);

    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
    for (const auto& a : artifacts) {
      write_atomic(dir / a.file_name, a.content);
      out << (dir / a.file_name).string() << '\n';
      if (gnuplot && a.plottable)
        out << emit_gnuplot(dir / a.file_name, PlotKind::automatic).string() << '\n';
    }
    write_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace painlab::cli
