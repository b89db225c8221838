#pragma once

#include <iosfwd>
#include <vector>

#include "lcol/graph.hpp"

namespace lcol {

/// Per-vertex colour lists, each sorted without repeats.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(n) {}
    ListAssignment(std::vector<std::vector<int>> l);

    static ListAssignment uniform(int n, int k);

    int n() const { return static_cast<int>(lists.size()); }
    const std::vector<int>& operator[](int v) const { return lists[v]; }
    bool contains(int v, int c) const;
    void set(int v, std::vector<int> colours);
    void remove(int v, int c);

    /// |L(v)| >= d(v) everywhere.
    bool is_degree_list(const Graph& g) const;
    ListAssignment restrict_to(const std::vector<int>& vertices) const;
};

/// True iff c respects every list; does not check properness.
bool respects_lists(const Colouring& c, const ListAssignment& l);

// "label: c1 c2 c3", one line per vertex.
ListAssignment read_lists(std::istream& in, const Graph& g);
void write_lists(std::ostream& out, const Graph& g, const ListAssignment& l);

}  // namespace lcol
