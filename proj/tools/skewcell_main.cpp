#include <filesystem>
#include <fstream>
#include <iostream>

#include "skewcell/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout <<
            "usage: skewcell <subcommand> [flags]\n"
            "\n"
            "subcommands:\n"
            "  verify      check the algebra axioms, the cell datum and any shift block\n"
            "  decomp      graded decomposition matrix of a cellular instance\n"
            "  fixedpoint  construct A^sigma with its skew cell datum\n"
            "  clifford    run the six-part Clifford verification suite\n"
            "  adjust      decomposition matrices in characteristic 0 and c, with A_F\n"
            "  uglov       Uglov multipartitions for given (e, p, rho, n)\n"
            "  dominance   the dominance relation on all l-partitions of n\n"
            "  tableaux    standard tableaux with degrees and residues\n"
            "  skeleton    the combinatorial P_sigma skeleton\n"
            "\n"
            "flags:\n"
            "  --gen toy:<m> | matrix:<n>:<d,..>:<w,..> | klr:<id>\n"
            "  --file <path>             load a skewcell/1 JSON file\n"
            "  --field rational|cyclotomic:<p>|fp:<c>|fpc:<p>,<c>\n"
            "  --char <c>                prime for adjust\n"
            "  --e --p --n --rho <list>  combinatorial parameters (--no-strict to relax)\n"
            "  --out <dir>               artifact directory (default .)\n"
            "  --format csv|json         matrix artifact format (default csv)\n";
        return args.empty() ? 2 : 0;
    }
    auto res = skewcell::run_cli(args);
    std::string out = ".";
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--out") out = args[i + 1];
    for (auto& [name, bytes] : res.artifacts) {
        std::filesystem::create_directories(out);
        std::ofstream f(out + "/" + name, std::ios::binary);
        f << bytes;
    }
    std::cout << res.output;
    return res.exit_code;
}
