#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouplabel/certificate.hpp"
#include "grouplabel/group.hpp"
#include "grouplabel/labeling.hpp"
#include "grouplabel/rstar.hpp"
#include "grouplabel/search.hpp"
#include "grouplabel/sigma.hpp"

namespace grouplabel {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InapplicableGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Transfers between cycles and paths

/// Labels edge e_i = {v_i, v_{i+1}} with c(v_i). The input must be A-cordial
/// unless `permissive` is set.
EdgeLabeling cycle_vertex_to_edge(const SimpleGraph& cycle, const VertexLabeling& c, bool permissive = false);

/// Every label decreased by g.
EdgeLabeling shift_labeling(const EdgeLabeling& f, const GroupElement& g);

struct PathLabeling {
  SimpleGraph path;
  EdgeLabeling labeling;
};

/// Turns an EA-cordial cycle labeling into an EA-cordial path labeling: shift
/// by the first g of maximal class size so that 0 is a maximal class, delete
/// the first 0-edge e_i and read the path from v_{i+1} around to v_i.
PathLabeling cycle_to_path(const SimpleGraph& cycle, const EdgeLabeling& f);

/// Drops every coordinate not listed in `keep`. The input must be EA-cordial
/// on a tree with |A| vertices; the result is EA-cordial over the kept factors.
EdgeLabeling project_labeling(const SimpleGraph& tree, const EdgeLabeling& f, const std::vector<std::size_t>& keep);

// ---------------------------------------------------------------------------
// Block construction on P_{4mk} over Z_{4m} + H

struct AntLayout {
  std::int64_t m = 0;
  std::int64_t k = 0;
  GroupSpec h;
  /// EA-cordial labeling of C_k over H with first label 0 (empty when k = 1).
  std::vector<GroupElement> base_cycle_labels;
  CoordinateMap to_target;
};

/// Decomposes the group and finds the base cycle labeling (first solution of
/// the search with the first edge pinned to 0).
AntLayout make_ant_layout(const GroupSpec& spec, SearchBudget budget = {});

/// Edge labels of P_{|A|} from the block formulas, mapped into the given
/// presentation. Throws InapplicableGroup when ant_decomposition is absent.
EdgeLabeling construct_ant_path(const GroupSpec& spec, SearchBudget budget = {});
EdgeLabeling construct_ant_path(const AntLayout& layout);

// ---------------------------------------------------------------------------
// Deciders

/// C_n is Z_k-cordial iff k is odd or n is not an odd multiple of k.
bool decide_cycle_zk_cordial(std::int64_t n, std::int64_t k);

/// P_n is E_k-cordial iff k is not 2 mod 4 or n is not an odd multiple of k;
/// P_2 never is, since both vertices receive the single edge label.
bool decide_path_ek_cordial(std::int64_t n, std::int64_t k);

/// True when a tree on n vertices cannot be EA-cordial for this group.
bool decide_tree_2mod4_obstruction(std::int64_t n, const GroupSpec& spec);

/// P_{|A|} is A-antimagic iff |A| is not 2 mod 4.
bool decide_path_a_antimagic(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Dispatchers

enum class ConstructionStatus { constructed, impossible, unknown };

std::string_view to_string(ConstructionStatus status);

struct ConstructionResult {
  ConstructionStatus status = ConstructionStatus::unknown;
  std::string route;
  std::optional<Certificate> certificate;
  std::uint64_t nodes_explored = 0;
};

/// A verified EA-cordial labeling of P_n over Z_k, Impossible exactly when
/// decide_path_ek_cordial is false, or Unknown if the cycle search ran out.
ConstructionResult construct_path_ek(std::int64_t n, std::int64_t k, SearchBudget budget = {});

/// Rotates so that the star sits at index 0. Over an elementary Abelian
/// 2-group this reads a_2 = a_1 + a_{n-1} with 1-based indices.
RStarSequence rotate_to_star(const RStarSequence& rs);

/// Path labels 0, a_2, ..., a_{n-1} from a rotated R*-sequence of (Z2)^m.
EdgeLabeling rstar_to_path_antimagic(const RStarSequence& rs);

/// A verified A-antimagic labeling of P_{|A|}, Impossible exactly when
/// |A| = 2 mod 4.
ConstructionResult construct_path_antimagic(const GroupSpec& spec, SearchBudget budget = {});

}  // namespace grouplabel
