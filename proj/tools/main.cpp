#include <iostream>

#ifdef __GLIBC__
#include <malloc.h>
#endif

#include "cli.hpp"

int main(int argc, char** argv) {
#ifdef __GLIBC__
    // Operator matrices are large and short-lived; keep them off mmap.
    mallopt(M_MMAP_THRESHOLD, 256 << 20);
    mallopt(M_TRIM_THRESHOLD, 256 << 20);
#endif
    std::vector<std::string> args(argv + 1, argv + argc);
    return eigenhodge::cli::run(args, std::cout, std::cerr);
}
