#ifndef CTM_ENUMERATION_HPP
#define CTM_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ctm/graph.hpp"

namespace ctm {

struct EnumerationRequest {
    int rank = 3;
    int half_order = 1;
    bool connected_only = true;
    bool count_only = false; // skip collecting representatives
    int jobs = 0;            // 0: use all available threads (parallel kernel)
};

struct EnumerationResult {
    long long count = 0;
    std::vector<ColoredGraph> graphs; // canonical representatives, sorted by key
};

// Exactly one representative per isomorphism class of rank-D colored graphs
// with 2p vertices: gauge sigma_1 = id, scan (sigma_2..sigma_D) over (S_p)^(D-1)
// and keep the tuples equal to their own canonical form.  Refuses requests
// beyond the desk-scale guard (the scan has (p!)^(D-1) tuples).
//
// enumerate() runs the OpenMP kernel; enumerate_serial() is the reference
// implementation kept for testing.  Their outputs are identical.
EnumerationResult enumerate_graphs(const EnumerationRequest& req);
EnumerationResult enumerate_serial(const EnumerationRequest& req);

// Streaming mode: calls sink on each representative in scan order instead of
// collecting; returns the class count.
long long enumerate_stream(const EnumerationRequest& req,
                           const std::function<void(const ColoredGraph&)>& sink);

bool enumeration_feasible(int rank, int half_order);

// Number of isomorphism classes of possibly disconnected rank-D graphs with
// 2p vertices (the number of 2p-point correlation functions): the Euler
// transform of the connected counts.
long long count_correlation_functions(int rank, int half_order);

// All classes (connected and disconnected) with exactly 2p vertices, assembled
// from multisets of connected classes.
std::vector<ColoredGraph> all_classes(int rank, int half_order);

// Disk cache in the GraphDocument format, one file per (rank, half_order,
// connected) request under `dir`; empty dir disables caching.
EnumerationResult enumerate_cached(const EnumerationRequest& req, const std::string& dir);

}  // namespace ctm

#endif  // CTM_ENUMERATION_HPP
