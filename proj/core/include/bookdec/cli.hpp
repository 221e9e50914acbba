#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bookdec/graph.hpp"

namespace bookdec {

// Command-line front end, callable in-process for tests. args excludes the
// program name. Returns the exit code: 0 success, 1 failed suite assertion,
// 2 usage/parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "name:p1,p2,..." or named small graphs. Accepted: K<n>, P<n>, C<n>, E<n>,
// S_<p>_<q>, book:t,p,q, star:n, path:n, cycle:n, complete:n, bipartite:a,b,
// doublestar:p,q, turan:n,k, kite:n,k, quasiclique:n,m, polarity:q, empty:n,
// bull, H5, petersen, claw, paw, diamond, and raw graph6 (optionally with a
// "g6:" prefix). Throws std::invalid_argument with a message otherwise.
Graph parse_graph_arg(const std::string& text);

}  // namespace bookdec
