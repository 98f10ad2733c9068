#include <cstdio>
#include <iostream>

#include "nccp/fixtures.hpp"
#include "nccp/verify.hpp"

int main(int argc, char** argv)
{
    nccp::VerifyOptions opt;
    opt.hasse4_edges = nccp::fixtures::hasse4_edges;
    opt.kreweras4_pairing = nccp::fixtures::kreweras4_pairing;
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    opt.progress = [](const std::string& s) { std::cerr << "... " << s << '\n'; };

    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        const auto r = nccp::run_criterion_by_id(id, opt);
        failed += !r.pass;
        std::cout << nccp::format_result(r) << std::endl;
        for (const auto& line : r.notes)
            if (verbose || !r.pass)
                std::cout << "      " << line << '\n';
    }
    std::cout << (10 - failed) << "/10 criteria pass\n";
    return failed ? 1 : 0;
}
