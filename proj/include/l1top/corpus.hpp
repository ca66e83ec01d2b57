#ifndef L1TOP_CORPUS_HPP
#define L1TOP_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "l1top/complex.hpp"

namespace l1top
{

/// Expected homology in one degree.
struct HomologySignature
{
    int degree;
    Index betti;
    std::vector<long> torsion;
};

struct CorpusEntry
{
    std::string name;
    ComplexPtr complex;
    int top_degree = 0;
    std::map<std::string, IntChain> cycles;  // "fundamental", "generator", ...
    std::vector<HomologySignature> documented;
};

struct CoverEntry
{
    CorpusEntry source;
    CellMap map;  // source complex -> base complex
    long degree;
};

/// Boundary of Delta^{n+1}, 1 <= n <= 4.
CorpusEntry make_sphere(int n);

/// d vertices and d edges e_i : v_i -> v_{i+1}, d >= 1.
CorpusEntry make_circle(int d);
CoverEntry circle_cover(int d);

/// One vertex, edges a (horizontal), b (vertical), c (diagonal), two triangles.
CorpusEntry make_torus();
/// The d-fold cyclic cover along a, with 2d triangles.
CoverEntry torus_cover(int d);

/// Two vertices, three edges, two triangles; H_1 = Z/2 generated by the diagonal.
CorpusEntry make_rp2();

/// Fan triangulation of the 4g-gon with word a1 b1 a1^-1 b1^-1 ...; g = 0
/// gives make_sphere(2).
CorpusEntry make_surface(int g);

/// The standard corpus: spheres 1..3, circle(1), torus, rp2, surface(2).
std::vector<CorpusEntry> standard_corpus();

}  // namespace l1top

#endif
