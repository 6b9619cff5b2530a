#include "corep/cli/app.hpp"

#include <iostream>

int main(int argc, char **argv)
{
  return corep::cli::run_app({argv, argv + argc}, std::cout, std::cerr);
}
