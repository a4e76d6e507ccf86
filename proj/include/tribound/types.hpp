#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tribound {

// Sorted 3-element subset of the vertex set.
using Triple = std::array<int, 3>;
using VertexPair = std::pair<int, int>;

// Invalid arguments (infeasible parameters, bad indices).
struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search/node budget exhausted; never a wrong answer.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction failed its mandatory post-verification.
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorts the vertices and rejects repeated or negative entries.
Triple make_triple(int a, int b, int c);

inline VertexPair make_pair_sorted(int u, int v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// 3-uniform multi-hypergraph on vertices {0..n-1}. Triples are kept
// lexicographically sorted with repeats adjacent.
class Hypergraph3 {
  public:
    Hypergraph3() = default;
    explicit Hypergraph3(int n) : n_(check_n(n)) {}
    Hypergraph3(int n, std::vector<Triple> triples);

    int n() const { return n_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t edge_count() const { return triples_.size(); }

    void add(const Triple& t);

    // Number of triples (with multiplicity) containing each pair.
    std::map<VertexPair, int> pair_counts() const;

    bool operator==(const Hypergraph3&) const = default;

  private:
    static int check_n(int n);
    void validate_triple(const Triple& t) const;

    int n_ = 0;
    std::vector<Triple> triples_;
};

// Loopless multigraph with integer edge multiplicities.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {
        if (n < 0) throw ParamError("Multigraph: negative vertex count");
    }

    int n() const { return n_; }

    void add_edge(int u, int v, int count = 1);
    int multiplicity(int u, int v) const;

    // Multiplicity-weighted degree.
    int degree(int v) const;

    // Total edge multiplicity e(G).
    long long edge_total() const;

    // Number of distinct underlying simple edges.
    std::size_t simple_edge_count() const { return mult_.size(); }

    const std::map<VertexPair, int>& edges() const { return mult_; }

    bool operator==(const Multigraph&) const = default;

  private:
    int n_ = 0;
    std::map<VertexPair, int> mult_;
};

// Partial triple system: triples on {0..nu-1} with every pair in at most
// lambda triples (counting multiplicity).
class TripleSystem {
  public:
    TripleSystem() = default;
    TripleSystem(int nu, int lambda);
    TripleSystem(int nu, int lambda, std::vector<Triple> triples);

    int nu() const { return nu_; }
    int lambda() const { return lambda_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t edge_count() const { return triples_.size(); }

    void add(const Triple& t);

    std::map<VertexPair, int> pair_counts() const;

    Hypergraph3 to_hypergraph() const { return Hypergraph3(nu_, triples_); }

    bool operator==(const TripleSystem&) const = default;

  private:
    int nu_ = 0;
    int lambda_ = 1;
    std::vector<Triple> triples_;
};

// Verification report for a constructed object.
struct Certificate {
    long long edge_count = 0;
    long long bound = 0;
    int max_codegree = 0;
    int codegree_cap = 0;
    int matching_number = 0;
    int matching_cap = 0;
    bool passed = false;
    std::string notes;
};

// passed iff edge_count == bound, max_codegree <= cap, matching <= cap.
Certificate make_certificate(long long edge_count, long long bound,
                             int max_codegree, int codegree_cap,
                             int matching_number, int matching_cap,
                             std::string notes = "");

inline long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace tribound
