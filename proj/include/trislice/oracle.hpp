#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trislice {

/* Rooted combinatorial map on darts 0..2E-1: alpha pairs darts into edges,
 * phi steps along face contours, sigma = phi . alpha rotates darts around
 * their origin vertex. A genus-0 rotation system is a planar map, so Euler
 * counting is the only planarity test needed. */
struct RootedMap {
    int L = 0;      // outer-face degree; 0 for closed maps
    int faces = 0;  // number of triangles
    int root = 0;
    std::vector<int> alpha;
    std::vector<int> phi;

    int darts() const { return (int)alpha.size(); }
    std::vector<int> sigma() const;
    std::vector<int> vertex_of() const;  // dart -> vertex id; the root vertex gets id 0
    int vertices() const;
    void validate() const;  // involution, face degrees, genus 0, transitivity

    /* Label-independent encoding obtained by breadth-first relabeling from
     * the root dart. Rooted maps have no nontrivial root-fixing
     * automorphisms, so key equality is rooted isomorphism. */
    std::vector<int> canonical_key() const;
};

struct CountRow {
    int F;
    int k;  // distance for closed tables, boundary length for near tables
    long long count;
};

struct CountTable {
    std::vector<CountRow> rows;
    long long at(int F, int k) const;  // 0 when the cell is absent
};

inline constexpr int kOracleFaceBound = 8;

/* All rooted closed triangulations with exactly F faces, one call per
 * rooted isomorphism class. Odd F yields nothing. */
void enumerate_closed(int F, const std::function<void(const RootedMap&)>& visit,
                      int face_bound = kOracleFaceBound);
long long count_closed(int F, int face_bound = kOracleFaceBound);

/* Histogram of vertices by graph distance from the root vertex; sums to V,
 * entry 0 is the root vertex itself. */
std::vector<long long> distance_profile(const RootedMap& m);

/* Rows (F, k, number of pairs (rooted map, marked vertex at distance k))
 * for even F <= F_max. The search tree may be split across workers; counts
 * merge by addition, so totals are schedule-independent. */
CountTable oracle_two_point(int F_max, int workers = 1, int face_bound = kOracleFaceBound);

struct NearFlags {
    bool simple = false;           // no loops, no multiple edges
    bool chord_free = false;       // no inner edge joining two boundary vertices
    bool boundary_simple = false;  // the L boundary vertices are pairwise distinct
};

bool map_is_simple(const RootedMap& m);
bool is_chord_free(const RootedMap& m);
bool boundary_is_simple(const RootedMap& m);

/* Rooted maps with one outer face of degree L, all inner faces triangles,
 * exactly F triangles, filtered by `flags`. */
void enumerate_near(int L, int F, NearFlags flags,
                    const std::function<void(const RootedMap&)>& visit,
                    int face_bound = kOracleFaceBound);

/* Rows (F, L, count) for every F <= F_max with F = L (mod 2). */
CountTable enumerate_near_counts(int L, int F_max, NearFlags flags,
                                 int face_bound = kOracleFaceBound);

// CSV form of a count table, header F,k,count, rows in stored order.
std::string counts_to_csv(const CountTable& table);

}  // namespace trislice
