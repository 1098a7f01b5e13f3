// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "autotherm/cli.hpp"

int main(int argc, char** argv) { return autotherm::cli::run(argc, argv, std::cout, std::cerr); }
