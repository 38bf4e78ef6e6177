#include <iostream>

#include "osg/cli.hpp"

int main(int argc, char** argv) {
  return osg::cli::run(argc, argv, std::cout, std::cerr);
}
