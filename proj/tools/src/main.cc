#include <iostream>

#include "metaqa/app/cli.h"

int main(int argc, char** argv) { return metaqa::app::run_cli(argc, argv, std::cout, std::cerr); }
