#include "qonsager/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return qons::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
