#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>

// Applies a flat JSON config file to a subcommand.  Keys are the long option
// names without leading dashes; arrays feed multi-value options one element
// at a time.  Options already given on the command line keep their parsed
// values, so explicit flags always win.  Unknown keys are rejected the same
// way unknown flags are.
inline void apply_json_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw CLI::FileError(path + " is not valid JSON: " + err.what());
  }
  if (!doc.is_object()) {
    throw CLI::FileError(path + ": config root must be a JSON object");
  }
  const auto scalar = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt =
        key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw CLI::ConfigError(path + ": unknown config key: " + key);
    }
    if (opt->count() > 0) continue;
    if (value.is_array()) {
      for (const auto& v : value) opt->add_result(scalar(v));
    } else {
      opt->add_result(scalar(value));
    }
    opt->run_callback();
  }
}

// Adds a `--config <file.json>` option to `sub` and installs `body` as its
// callback, running behind the config application.  Config handling lives
// here rather than in CLI11's set_config machinery because that only fires
// for the top-level app, not for subcommands.
inline void finish_subcommand(CLI::App* sub, std::function<void()> body) {
  auto path = std::make_shared<std::string>();
  sub->add_option("--config", *path,
                  "JSON file carrying the same keys as the long flags; "
                  "explicit flags win")
      ->check(CLI::ExistingFile);
  sub->callback([sub, path, body = std::move(body)] {
    if (!path->empty()) apply_json_config(sub, *path);
    body();
  });
}
