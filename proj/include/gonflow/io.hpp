#pragma once

#include <iosfwd>
#include <string>

#include "gonflow/ilp.hpp"
#include "gonflow/instance.hpp"
#include "gonflow/morphism.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Line-oriented text formats. `#` starts a comment; blank lines are skipped.
//
// Instance:  problem NAME / v / e id u v w [lower] / arc id tail head cap /
//            target, interval, bound, maxout, cap, source, sink, value,
//            budget, red, blue / subdiv vtx orig-edge / trivialno
// Partition: tnode / tarc / bag node v... / root / pathdecomp
// Morphism:  base graph (v/e) + tnode/tarc + vmap/emap/index +
//            refine subdivide <e> | refine leaf <v>   (tree arcs are
//            numbered by 1-based order of their tarc lines)
// Witness:   orient edge tail head / flow id f / dominator v / assign b r
// ILP:       var x lo hi / con 1*x + -2*y <= rhs / min 1*x + ...

AnyInstance parse_instance(std::istream& in);
AnyInstance load_instance(const std::string& path);
void write_instance(std::ostream& out, const AnyInstance& inst);

TreePartition parse_partition(std::istream& in);
TreePartition load_partition(const std::string& path);
void write_partition(std::ostream& out, const TreePartition& tp);

struct MorphismFile {
  WeightedGraph g;      // base weighted graph
  HarmonicMorphism m;   // source rebuilt by replaying the trace on g
};

MorphismFile parse_morphism(std::istream& in);
MorphismFile load_morphism(const std::string& path);
void write_morphism(std::ostream& out, const MorphismFile& mf);

AnyWitness parse_witness(std::istream& in, const AnyInstance& inst);
void write_witness(std::ostream& out, const AnyInstance& inst, const AnyWitness& w);

IlpModel parse_ilp_model(std::istream& in);

}  // namespace gonflow
