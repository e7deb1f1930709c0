#include "trislice/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace trislice {

std::vector<int> RootedMap::sigma() const {
    std::vector<int> s(darts());
    for (int d = 0; d < darts(); ++d) s[d] = phi[alpha[d]];
    return s;
}

std::vector<int> RootedMap::vertex_of() const {
    std::vector<int> sig = sigma();
    std::vector<int> vid(darts(), -1);
    int nv = 0;
    // scanning from the root dart first gives the root vertex id 0
    for (int d = 0; d < darts(); ++d) {
        if (vid[d] >= 0) continue;
        for (int x = d; vid[x] < 0; x = sig[x]) vid[x] = nv;
        ++nv;
    }
    return vid;
}

int RootedMap::vertices() const {
    std::vector<int> vid = vertex_of();
    return vid.empty() ? 0 : 1 + *std::max_element(vid.begin(), vid.end());
}

void RootedMap::validate() const {
    const int D = darts();
    if ((int)phi.size() != D) throw std::runtime_error("RootedMap: phi size mismatch");
    if (D % 2 != 0) throw std::runtime_error("RootedMap: odd dart count");
    if (D > 0 && (root < 0 || root >= D)) throw std::runtime_error("RootedMap: root out of range");
    for (int d = 0; d < D; ++d) {
        if (alpha[d] < 0 || alpha[d] >= D || alpha[d] == d || alpha[alpha[d]] != d)
            throw std::runtime_error("RootedMap: alpha is not a fixed-point-free involution");
        if (phi[d] < 0 || phi[d] >= D) throw std::runtime_error("RootedMap: phi out of range");
    }
    std::vector<char> hit(D, 0);
    for (int d = 0; d < D; ++d) {
        if (hit[phi[d]]) throw std::runtime_error("RootedMap: phi is not a permutation");
        hit[phi[d]] = 1;
    }

    // face degrees: triangles everywhere, plus one outer face of degree L
    // through the root dart when L > 0
    std::vector<char> seen(D, 0);
    int tri = 0, outer = 0;
    for (int d = 0; d < D; ++d) {
        if (seen[d]) continue;
        int len = 0;
        bool has_root = false;
        for (int x = d; !seen[x]; x = phi[x]) {
            seen[x] = 1;
            ++len;
            if (L > 0 && x == root) has_root = true;
        }
        if (has_root) {
            if (len != L) throw std::runtime_error("RootedMap: outer face degree != L");
            ++outer;
        } else {
            if (len != 3) throw std::runtime_error("RootedMap: inner face is not a triangle");
            ++tri;
        }
    }
    if (tri != faces || outer != (L > 0 ? 1 : 0))
        throw std::runtime_error("RootedMap: face count mismatch");

    const int V = vertices();
    const int E = D / 2;
    const int Ftot = faces + (L > 0 ? 1 : 0);
    if (D > 0 && V - E + Ftot != 2) throw std::runtime_error("RootedMap: not genus 0");

    if (D > 0) {
        std::vector<int> sig = sigma();
        std::vector<char> reach(D, 0);
        std::vector<int> stack{root};
        reach[root] = 1;
        int n = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {sig[x], alpha[x]})
                if (!reach[y]) {
                    reach[y] = 1;
                    ++n;
                    stack.push_back(y);
                }
        }
        if (n != D) throw std::runtime_error("RootedMap: <sigma, alpha> not transitive");
    }
}

std::vector<int> RootedMap::canonical_key() const {
    const int D = darts();
    std::vector<int> sig = sigma();
    std::vector<int> canon(D, -1), order;
    order.reserve(D);
    if (D > 0) {
        canon[root] = 0;
        order.push_back(root);
    }
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int nb : {sig[d], alpha[d]})
            if (canon[nb] < 0) {
                canon[nb] = (int)order.size();
                order.push_back(nb);
            }
    }
    std::vector<int> key;
    key.reserve(2 * D + 2);
    key.push_back(L);
    key.push_back(faces);
    for (int d : order) {
        key.push_back(canon[sig[d]]);
        key.push_back(canon[alpha[d]]);
    }
    return key;
}

long long CountTable::at(int F, int k) const {
    for (const CountRow& r : rows)
        if (r.F == F && r.k == k) return r.count;
    return 0;
}

std::vector<long long> distance_profile(const RootedMap& m) {
    std::vector<int> vid = m.vertex_of();
    const int V = m.vertices();
    std::vector<std::vector<int>> adj(V);
    for (int d = 0; d < m.darts(); ++d)
        if (d < m.alpha[d]) {
            adj[vid[d]].push_back(vid[m.alpha[d]]);
            adj[vid[m.alpha[d]]].push_back(vid[d]);
        }
    std::vector<int> dist(V, -1);
    std::queue<int> q;
    dist[vid[m.root]] = 0;
    q.push(vid[m.root]);
    int maxd = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        maxd = std::max(maxd, dist[v]);
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    for (int v = 0; v < V; ++v)
        if (dist[v] < 0) throw std::runtime_error("distance_profile: disconnected map");
    std::vector<long long> hist(maxd + 1, 0);
    for (int v = 0; v < V; ++v) ++hist[dist[v]];
    return hist;
}

bool map_is_simple(const RootedMap& m) {
    std::vector<int> vid = m.vertex_of();
    std::set<std::pair<int, int>> edges;
    for (int d = 0; d < m.darts(); ++d) {
        if (d > m.alpha[d]) continue;
        int a = vid[d], b = vid[m.alpha[d]];
        if (a == b) return false;  // loop
        if (!edges.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return true;
}

bool boundary_is_simple(const RootedMap& m) {
    std::vector<int> vid = m.vertex_of();
    std::set<int> bv;
    for (int d = 0; d < m.L; ++d)
        if (!bv.insert(vid[d]).second) return false;
    return true;
}

bool is_chord_free(const RootedMap& m) {
    std::vector<int> vid = m.vertex_of();
    std::vector<char> on_boundary(m.vertices(), 0);
    for (int d = 0; d < m.L; ++d) on_boundary[vid[d]] = 1;
    for (int d = m.L; d < m.darts(); ++d) {
        if (d > m.alpha[d] || m.alpha[d] < m.L) continue;  // keep inner edges only
        if (on_boundary[vid[d]] && on_boundary[vid[m.alpha[d]]]) return false;
    }
    return true;
}

namespace {

/* Backtracking over alpha-pairings with the face permutation fixed up
 * front. sigma = phi . alpha is tracked incrementally as a union of open
 * paths and finished cycles, which makes the vertex count (and hence the
 * genus) pruneable long before the pairing completes.
 *
 * Triangle blocks not yet touched by any pairing are interchangeable, so
 * the search only ever enters the lowest unused block, at its first dart.
 * Every rooted map then arises from exactly one pairing; a canonical-form
 * set asserts that no class is ever produced twice. */
struct PairingSearch {
    int D, L, F, V_target, nblocks;
    std::vector<int> phi, block_of, block_base, alpha, opp;
    std::vector<char> used, has_out, has_in;
    int done = 0, paths = 0, lowest_unused = 0, pairs_made = 0;
    long long branch_counter = 0;
    int branch_mod = 1, branch_res = 0;
    const std::function<void(const RootedMap&)>* visit = nullptr;
    std::set<std::vector<int>>* seen = nullptr;

    PairingSearch(int L_, int F_) : L(L_), F(F_) {
        D = L + 3 * F;
        V_target = L == 0 ? F / 2 + 2 : (L + F) / 2 + 1;
        phi.resize(D);
        block_of.resize(D);
        for (int d = 0; d < L; ++d) {
            phi[d] = (d + 1) % L;
            block_of[d] = 0;
        }
        const int first_tri_block = L > 0 ? 1 : 0;
        nblocks = first_tri_block + F;
        block_base.resize(nblocks, 0);
        for (int j = 0; j < F; ++j) {
            int base = L + 3 * j;
            block_base[first_tri_block + j] = base;
            for (int i = 0; i < 3; ++i) {
                phi[base + i] = base + (i + 1) % 3;
                block_of[base + i] = first_tri_block + j;
            }
        }
        alpha.assign(D, -1);
        opp.resize(D);
        for (int d = 0; d < D; ++d) opp[d] = d;
        has_out.assign(D, 0);
        has_in.assign(D, 0);
        paths = D;
        used.assign(nblocks, 0);
        if (nblocks > 0) used[0] = 1;  // outer face or root triangle
        lowest_unused = 1;
        while (lowest_unused < nblocks && used[lowest_unused]) ++lowest_unused;
    }

    struct SigmaRec {
        bool closed;
        int s, t;
    };

    SigmaRec define_sigma(int u, int v) {
        has_out[u] = has_in[v] = 1;
        if (opp[u] == v) {  // u ends the path that starts at v: a cycle closes
            ++done;
            --paths;
            return {true, u, v};
        }
        int s = opp[u], t = opp[v];
        opp[s] = t;
        opp[t] = s;
        --paths;
        return {false, s, t};
    }

    void undo_sigma(int u, int v, const SigmaRec& r) {
        has_out[u] = has_in[v] = 0;
        ++paths;
        if (r.closed) {
            --done;
        } else {
            opp[r.s] = u;
            opp[r.t] = v;
        }
    }

    void run() {
        if (D % 2 != 0) return;
        rec(0);
    }

    void rec(int from) {
        int d = from;
        while (d < D && alpha[d] >= 0) ++d;
        if (d == D) {
            emit();
            return;
        }
        // d in an untouched block means everything before it is already a
        // finished component: the map cannot come out connected.
        if (!used[block_of[d]]) return;
        for (int e = d + 1; e < D; ++e) {
            if (alpha[e] >= 0 || !used[block_of[e]]) continue;
            try_pair(d, e);
        }
        if (lowest_unused < nblocks) try_pair(d, block_base[lowest_unused]);
    }

    void try_pair(int d, int e) {
        if (pairs_made == 0 && (branch_counter++ % branch_mod) != branch_res) return;
        const int b = block_of[e];
        const bool fresh = !used[b];
        const int old_lowest = lowest_unused;
        if (fresh) {
            used[b] = 1;
            while (lowest_unused < nblocks && used[lowest_unused]) ++lowest_unused;
        }
        alpha[d] = e;
        alpha[e] = d;
        ++pairs_made;
        SigmaRec r1 = define_sigma(d, phi[e]);
        SigmaRec r2 = define_sigma(e, phi[d]);
        if (done <= V_target && done + paths >= V_target) rec(d);
        undo_sigma(e, phi[d], r2);
        undo_sigma(d, phi[e], r1);
        --pairs_made;
        alpha[d] = alpha[e] = -1;
        if (fresh) {
            used[b] = 0;
            lowest_unused = old_lowest;
        }
    }

    void emit() {
        if (done != V_target) return;
        RootedMap m{L, F, 0, alpha, phi};
        m.validate();
        if (seen && !seen->insert(m.canonical_key()).second)
            throw std::logic_error("oracle: canonical form produced twice");
        (*visit)(m);
    }
};

void check_bound(int F, int face_bound) {
    if (F > face_bound)
        throw std::runtime_error("oracle: resource bound exceeded (F = " + std::to_string(F) +
                                 " > " + std::to_string(face_bound) + ")");
    if (F < 0) throw std::invalid_argument("oracle: negative face count");
}

}  // namespace

void enumerate_closed(int F, const std::function<void(const RootedMap&)>& visit,
                      int face_bound) {
    check_bound(F, face_bound);
    if (F == 0) return;  // no closed triangulation is faceless
    PairingSearch search(0, F);
    std::set<std::vector<int>> seen;
    search.visit = &visit;
    search.seen = &seen;
    search.run();
}

long long count_closed(int F, int face_bound) {
    long long n = 0;
    enumerate_closed(F, [&](const RootedMap&) { ++n; }, face_bound);
    return n;
}

void enumerate_near(int L, int F, NearFlags flags,
                    const std::function<void(const RootedMap&)>& visit, int face_bound) {
    if (L < 1) throw std::invalid_argument("oracle: boundary length must be >= 1");
    check_bound(F, face_bound);
    if ((L + F) % 2 != 0) return;  // dart-count parity
    std::function<void(const RootedMap&)> filtered = [&](const RootedMap& m) {
        if (flags.simple && !map_is_simple(m)) return;
        if (flags.chord_free && !is_chord_free(m)) return;
        if (flags.boundary_simple && !boundary_is_simple(m)) return;
        visit(m);
    };
    PairingSearch search(L, F);
    std::set<std::vector<int>> seen;
    search.visit = &filtered;
    search.seen = &seen;
    search.run();
}

CountTable enumerate_near_counts(int L, int F_max, NearFlags flags, int face_bound) {
    if (L < 1) throw std::invalid_argument("oracle: boundary length must be >= 1");
    check_bound(std::max(F_max, 0), face_bound);
    CountTable table;
    for (int F = L % 2; F <= F_max; F += 2) {
        long long n = 0;
        enumerate_near(L, F, flags, [&](const RootedMap&) { ++n; }, face_bound);
        table.rows.push_back({F, L, n});
    }
    return table;
}

CountTable oracle_two_point(int F_max, int workers, int face_bound) {
    check_bound(std::max(F_max, 0), face_bound);
    if (workers < 1) throw std::invalid_argument("oracle: need at least one worker");
    CountTable table;
    for (int F = 2; F <= F_max; F += 2) {
        const int kmax = F / 2 + 1;
        std::vector<long long> counts(kmax + 1, 0);
        if (workers == 1) {
            std::function<void(const RootedMap&)> tally = [&](const RootedMap& m) {
                std::vector<long long> hist = distance_profile(m);
                for (int k = 0; k < (int)hist.size(); ++k) counts[k] += hist[k];
            };
            PairingSearch search(0, F);
            std::set<std::vector<int>> seen;
            search.visit = &tally;
            search.seen = &seen;
            search.run();
        } else {
            std::vector<std::vector<long long>> part(workers,
                                                     std::vector<long long>(kmax + 1, 0));
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    std::function<void(const RootedMap&)> tally = [&, w](const RootedMap& m) {
                        std::vector<long long> hist = distance_profile(m);
                        for (int k = 0; k < (int)hist.size(); ++k) part[w][k] += hist[k];
                    };
                    PairingSearch search(0, F);
                    std::set<std::vector<int>> seen;
                    search.visit = &tally;
                    search.seen = &seen;
                    search.branch_mod = workers;
                    search.branch_res = w;
                    search.run();
                });
            for (std::thread& th : pool) th.join();
            for (int w = 0; w < workers; ++w)
                for (int k = 0; k <= kmax; ++k) counts[k] += part[w][k];
        }
        for (int k = 0; k <= kmax; ++k) table.rows.push_back({F, k, counts[k]});
    }
    return table;
}

std::string counts_to_csv(const CountTable& table) {
    std::string out = "F,k,count\n";
    for (const CountRow& r : table.rows)
        out += std::to_string(r.F) + "," + std::to_string(r.k) + "," + std::to_string(r.count) +
               "\n";
    return out;
}

}  // namespace trislice
