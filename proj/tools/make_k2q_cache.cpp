// Offline generator for the complete-graph coloring certificates shipped
// under data/k2q. Runs the exact solver for each requested q, validates the
// result, and writes q<q>.icol with its sha256 integrity line. Not part of
// the normal CLI; rerun only when regenerating the cache.

#include <cstdlib>
#include <iostream>
#include <string>

#include "icol/certificates.hpp"
#include "icol/coloring.hpp"
#include "icol/graph.hpp"
#include "icol/solver.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: make_k2q_cache <dir> <q>... [--max-nodes N]\n";
        return 64;
    }
    std::string dir = argv[1];
    long long max_nodes = 200'000'000;
    std::vector<int> qs;
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--max-nodes" && i + 1 < argc) {
            max_nodes = std::atoll(argv[++i]);
        } else {
            qs.push_back(std::atoi(arg.c_str()));
        }
    }
    for (int q : qs) {
        const int n = 1 << q;
        const int target = 2 * n - 2 - q;
        icol::Graph g = icol::make_complete(n);
        std::cerr << "searching interval " << target << "-coloring of K_" << n << " ...\n";
        icol::SolveOutcome out =
            icol::find_interval_coloring(g, target, {max_nodes, {}});
        if (out.status != icol::SolveStatus::feasible) {
            std::cerr << "q=" << q << ": "
                      << (out.status == icol::SolveStatus::unknown
                              ? "budget exhausted after " +
                                    std::to_string(out.nodes_explored) + " nodes"
                              : "infeasible")
                      << "\n";
            return 1;
        }
        icol::ValidationReport rep = icol::validate_interval(g, *out.certificate);
        if (!rep.valid || rep.t != target) {
            std::cerr << "q=" << q << ": solver returned a bad certificate\n";
            return 1;
        }
        icol::write_k2q_certificate(q, *out.certificate, dir);
        std::cerr << "q=" << q << ": ok, " << out.nodes_explored << " nodes, t=" << rep.t
                  << "\n";
    }
    return 0;
}
