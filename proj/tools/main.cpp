#include <sphpersp/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
	return sphpersp::cli_main(argc, argv, std::cout, std::cerr);
}
