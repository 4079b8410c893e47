#include "burstctl.hpp"

int main(int argc, char** argv) { return burstctl::run(argc, argv); }
