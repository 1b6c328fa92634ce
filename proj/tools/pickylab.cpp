#include "pickylab/cli.hpp"

int main(int argc, char **argv)
{
  return pickylab::run(argc, argv);
}
