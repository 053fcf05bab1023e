#pragma once

#include <map>
#include <optional>
#include <vector>

#include "moea/core.hpp"

namespace moea::decomp {

/// Das-Dennis simplex lattice: every vector with components in
/// {0, 1/H, ..., 1} summing to one, in lexicographic order.
/// Count is C(H+m-1, m-1).
std::vector<Vec> das_dennis(int m, int H);

/// Lattice size C(H+m-1, m-1).
long long lattice_size(int m, int H);

/// Smallest H whose lattice has exactly n vectors, if any.
std::optional<int> divisions_for_population(int m, int n);

/// For each weight vector, the indices of the T nearest weight vectors in
/// Euclidean distance (self included at distance zero). Distance ties are
/// broken toward the lower index; each neighborhood is returned sorted by
/// index.
std::vector<std::vector<int>> neighborhoods(const std::vector<Vec>& weights, int T);

/// Chebyshev aggregation max_j lambda_j * (f_j - z_j). Zero weight
/// components are used verbatim.
double tchebycheff(const Vec& f, const Vec& lambda, const Vec& z);

/// Componentwise minimum of z and f, in place.
void update_reference(Vec& z, const Vec& f);

/// Classic decomposition replacement: every neighbor subproblem whose
/// aggregation value would not get worse adopts the offspring (ties
/// accept). Returns the number of replaced incumbents.
int update_neighbors(std::vector<Individual>& pop, const Individual& offspring,
                     const std::vector<int>& neighborhood,
                     const std::vector<Vec>& weights, const Vec& z);

/// Archive of mutually nondominated solutions with distinct objective
/// vectors. capacity == 0 means unbounded; a bounded archive prunes the
/// member with the smallest crowding distance (extreme members protected).
class ExternalArchive {
public:
    explicit ExternalArchive(std::size_t capacity = 0) : capacity_(capacity) {}

    /// Inserts per the archive rule; returns true if the offspring entered.
    bool insert(const Individual& ind);

    std::size_t size() const;
    std::size_t capacity() const { return capacity_; }

    /// Snapshot of the members: sorted by f1 for bi-objective archives,
    /// insertion order otherwise.
    std::vector<Individual> members() const;

private:
    std::size_t capacity_;
    int m_ = 0;
    // bi-objective archives are a staircase keyed by f1 (f1 values are
    // unique within a mutually nondominated planar set)
    std::map<double, Individual> stair_;
    std::vector<Individual> flat_;

    bool insert2d(const Individual& ind);
    bool insertnd(const Individual& ind);
    void prune();
};

}  // namespace moea::decomp
