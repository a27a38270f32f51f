#include "blocklab/catalog.hpp"

namespace blocklab {

// The same texts ship as files under catalog/ and are parsed by the same
// public parser; a test keeps the two copies identical.
const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = {
    {"C1", 1,
        "# C1: trivial group, as a Cayley table\n"
        "cayley 1\n"
        "0\n"
        ""},
    {"C2", 2,
        "# C2: cyclic of order 2\n"
        "perm 2\n"
        "2 1\n"
        ""},
    {"C3", 3,
        "# C3: cyclic of order 3\n"
        "perm 3\n"
        "2 3 1\n"
        ""},
    {"C4", 4,
        "# C4: cyclic of order 4\n"
        "perm 4\n"
        "2 3 4 1\n"
        ""},
    {"C6", 6,
        "# C6: cyclic of order 6\n"
        "perm 6\n"
        "2 3 4 5 6 1\n"
        ""},
    {"S3", 6,
        "# S3: symmetric group on 3 points\n"
        "perm 3\n"
        "2 1 3\n"
        "2 3 1\n"
        ""},
    {"D8", 8,
        "# D8: dihedral of order 8\n"
        "perm 4\n"
        "2 3 4 1\n"
        "3 2 1 4\n"
        ""},
    {"Q8", 8,
        "# Q8: quaternion group, left regular action on {1,-1,i,-i,j,-j,k,-k}\n"
        "perm 8\n"
        "3 4 2 1 7 8 6 5\n"
        "5 6 8 7 2 1 3 4\n"
        ""},
    {"D10", 10,
        "# D10: dihedral of order 10\n"
        "perm 5\n"
        "2 3 4 5 1\n"
        "1 5 4 3 2\n"
        ""},
    {"A4", 12,
        "# A4: alternating group on 4 points\n"
        "perm 4\n"
        "2 3 1 4\n"
        "2 4 3 1\n"
        ""},
    {"C12", 12,
        "# C12: cyclic of order 12\n"
        "perm 12\n"
        "2 3 4 5 6 7 8 9 10 11 12 1\n"
        ""},
    {"C3xS3", 18,
        "# C3xS3: direct product, C3 on {1,2,3}, S3 on {4,5,6}\n"
        "perm 6\n"
        "2 3 1 4 5 6\n"
        "1 2 3 5 4 6\n"
        "1 2 3 5 6 4\n"
        ""},
    {"F20", 20,
        "# F20: Frobenius group of order 20 = AGL(1,5)\n"
        "perm 5\n"
        "2 3 4 5 1\n"
        "1 3 5 2 4\n"
        ""},
    {"S4", 24,
        "# S4: symmetric group on 4 points\n"
        "perm 4\n"
        "2 1 3 4\n"
        "2 3 4 1\n"
        ""},
    {"SL23", 24,
        "# SL23: SL(2,3) acting on the 8 nonzero vectors of F_3^2\n"
        "# vectors: 1=(1,0) 2=(2,0) 3=(0,1) 4=(1,1) 5=(2,1) 6=(0,2) 7=(1,2) 8=(2,2)\n"
        "perm 8\n"
        "1 2 4 5 3 8 6 7\n"
        "3 6 2 5 8 1 4 7\n"
        ""},
    {"A5", 60,
        "# A5: alternating group on 5 points\n"
        "perm 5\n"
        "2 3 4 5 1\n"
        "2 3 1 4 5\n"
        ""},
    {"S5", 120,
        "# S5: symmetric group on 5 points\n"
        "perm 5\n"
        "2 1 3 4 5\n"
        "2 3 4 5 1\n"
        ""},
    {"S6", 720,
        "# S6: symmetric group on 6 points\n"
        "perm 6\n"
        "2 1 3 4 5 6\n"
        "2 3 4 5 6 1\n"
        ""},
    };
    return entries;
}

const CatalogEntry* find_builtin(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace blocklab
