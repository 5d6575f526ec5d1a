#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/rational.hpp"

namespace gk::roots {

// Edge of an explicitly given diagram, 0-based nodes. For multiplicity > 1
// the edge points from the longer root to the shorter one.
struct DiagramEdge {
    int from = 0;
    int to = 0;
    int multiplicity = 1;
};

// Finite-type Dynkin diagram held as its Cartan matrix,
// cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
class DynkinDiagram {
public:
    // "A4", "B3", "D4", "E6", "F4", "G2", products "A1xA1", Bourbaki numbering.
    static DynkinDiagram from_type(std::string_view type);
    static DynkinDiagram from_edges(int nodes, const std::vector<DiagramEdge>& edges);
    static DynkinDiagram from_cartan(std::vector<IntVec> cartan, std::string name = "custom");

    int rank() const { return static_cast<int>(cartan_.size()); }
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<IntVec>& cartan_matrix() const { return cartan_; }
    const std::string& name() const { return name_; }

    // Squared lengths of the simple roots, longest root of each component = 2.
    const RationalVec& simple_norms() const { return norms_; }
    // (alpha_i, alpha_j) for the normalization above.
    Rational inner(int i, int j) const { return gram_[i][j]; }

private:
    DynkinDiagram(std::vector<IntVec> cartan, std::string name);

    std::vector<IntVec> cartan_;
    std::string name_;
    RationalVec norms_;
    std::vector<RationalVec> gram_;
};

// Quasi-split datum: absolute diagram, the diagram automorphism through which
// Galois acts, and the degree d' of the restriction-of-scalars layer.
class GroupDatum {
public:
    // Validates that `automorphism` (0-based node permutation) preserves
    // the diagram and that its order divides `automorphism_order`.
    GroupDatum(DynkinDiagram diagram, std::vector<int> automorphism, int automorphism_order,
               int res_degree = 1, std::string label = {});

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<int>& automorphism() const { return automorphism_; }
    int automorphism_order() const { return order_; }
    int res_degree() const { return res_degree_; }
    const std::string& label() const { return label_; }

private:
    DynkinDiagram diagram_;
    std::vector<int> automorphism_;
    int order_;
    int res_degree_;
    std::string label_;
};

// Standard nontrivial automorphism of a connected diagram type of the given
// order (A_n, D_n, E6 order 2; D4 order 3). Throws InputError otherwise.
std::vector<int> standard_automorphism(std::string_view type, int order);

// The families of the classification of absolutely simple quasi-split groups
// that split over an everywhere unramified extension.
enum class Family { split, su_n_n1, su_n_n, spin_minus, triality_d4, outer_e6 };

Family parse_family(std::string_view name);
std::string to_string(Family f);

// Datum for a family at relative rank n (the split family uses A_n).
GroupDatum family_datum(Family family, int n, int res_degree);
// Admissible relative ranks of a family.
bool family_rank_admissible(Family family, int n);
// Family and n of a datum built from a connected type string, if it is one of them.
std::optional<std::pair<Family, int>> identify_family(const GroupDatum& datum);

enum class LengthClass { single, short_root, long_root };
enum class RankOneType { sl2, su21 };

std::string to_string(LengthClass c);
std::string to_string(RankOneType t);

struct RelativeRoot {
    int index = 0;
    IntVec coords;          // in the basis of relative simple roots
    std::vector<int> orbit;  // absolute positive roots restricting to this root
    LengthClass length_class = LengthClass::single;
    int d_alpha = 1;
    RankOneType rank_one_type = RankOneType::sl2;
    bool positive = true;
    int component = 0;
    Rational norm2;  // squared length of the restriction
};

struct Component {
    std::vector<int> nodes;  // relative simple roots
    std::string type;        // "A2", "B3", "G2", ...
    std::vector<int> roots;  // indices of positive reduced roots
    bool two_lengths = false;
};

// The relative root system of a quasi-split datum. Only reduced roots are
// stored; divisible roots from BC-type folding are recorded through the
// SU(2,1) rank-one type of their halves.
class RelativeRootSystem {
public:
    explicit RelativeRootSystem(GroupDatum datum);

    const GroupDatum& datum() const { return datum_; }
    int rank() const { return static_cast<int>(orbits_.size()); }
    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    int orbit_of_node(int node) const { return node_orbit_[node]; }

    const std::vector<IntVec>& cartan() const { return cartan_; }
    const std::vector<RationalVec>& gram() const { return gram_; }
    const std::vector<RelativeRoot>& positive_roots() const { return roots_; }
    const RelativeRoot& root(int index) const;
    const std::vector<Component>& components() const { return components_; }
    bool had_divisible_roots() const { return non_reduced_; }

    // Index of the positive reduced root with these coordinates (or of its
    // negative); nullopt if the vector is not a reduced root.
    std::optional<int> find(const IntVec& coords) const;
    bool is_root(const IntVec& coords) const { return find(coords).has_value(); }

    // Simple reflection s_i applied to a coordinate vector.
    IntVec reflect(int i, const IntVec& coords) const;

    // Absolute positive roots in simple-root coordinates of the absolute diagram.
    const std::vector<IntVec>& absolute_roots() const { return absolute_; }

    // Relative type string, components joined by 'x'.
    std::string type_string() const;

private:
    GroupDatum datum_;
    std::vector<IntVec> absolute_;
    std::vector<std::vector<int>> orbits_;
    std::vector<int> node_orbit_;
    std::vector<IntVec> cartan_;
    std::vector<RationalVec> gram_;
    std::vector<RelativeRoot> roots_;
    std::map<IntVec, int> lookup_;
    std::vector<Component> components_;
    bool non_reduced_ = false;
};

RelativeRootSystem restrict_roots(const GroupDatum& datum);

// Positive roots of the absolute diagram in simple-root coordinates.
std::vector<IntVec> absolute_positive_roots(const DynkinDiagram& diagram);

// Classifies a connected Cartan matrix (convention above).
std::string classify_connected(const std::vector<IntVec>& cartan);

RankOneType rank_one_type(const RelativeRootSystem& system, const IntVec& root_coords);
int d_alpha(const RelativeRootSystem& system, const IntVec& root_coords);

// d_alpha per length class as tabulated in the classification statement.
std::map<LengthClass, int> proposition_table(Family family, int n, int res_degree);

// d_alpha per length class read off a computed relative system (one simple component).
std::map<LengthClass, int> derived_table(const RelativeRootSystem& system);

}  // namespace gk::roots
