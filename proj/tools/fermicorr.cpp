// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include <fermicorr/cli.hpp>

int main(int argc, char** argv) { return fermicorr::cli::run(argc, argv, std::cout, std::cerr); }
