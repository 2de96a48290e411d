#ifndef CRITPOSETS_IO_HPP
#define CRITPOSETS_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "critposets/digraph.hpp"

namespace critposets {

/// Malformed edge-list input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text edge-list format: a header line `digraph n=<N>` or `graph n=<N>`,
// then one `x y` record per arc/edge; lines starting with `#` are comments,
// blank lines are skipped.

GraphOrDigraph read_edge_list(std::istream& in);
GraphOrDigraph parse_edge_list(const std::string& text);
GraphOrDigraph read_edge_list_file(const std::string& path);

std::string to_edge_list(const Digraph& d);
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Poset& p);
std::string to_edge_list(const GraphOrDigraph& g);

std::string to_dot(const Digraph& d);
std::string to_dot(const Graph& g);
std::string to_dot(const GraphOrDigraph& g);

}  // namespace critposets

#endif
