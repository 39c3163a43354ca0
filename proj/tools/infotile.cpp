#include "infotile/cli.hpp"

int main(int argc, char** argv) { return infotile::run(argc, argv); }
