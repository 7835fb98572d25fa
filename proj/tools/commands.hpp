#pragma once

#include <CLI11.hpp>
#include <memory>

#include "json_config.hpp"

// Exit codes: 0 success, 1 failed check or I/O error, 2 usage error.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

void register_verify(CLI::App& app, int& exit_code);
void register_simulate(CLI::App& app, int& exit_code);
void register_rates(CLI::App& app, int& exit_code);
void register_instance(CLI::App& app, int& exit_code);
void register_risk(CLI::App& app, int& exit_code);
