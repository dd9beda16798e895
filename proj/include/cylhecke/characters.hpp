#pragma once

#include <map>
#include <vector>

#include "cylhecke/brh.hpp"
#include "cylhecke/partition.hpp"
#include "cylhecke/tpoly.hpp"

namespace cylhecke {

// Weight of one broken rim hook step:
//   (t-1)^{#b-1} prod_h (-1)^{r(h)-1} t^{c(h)-1}
// The empty broken rim hook has weight 1.
TPoly brh_weight(const BrhStats& stats);

// Irreducible Hecke character chi_t^lambda(alpha), alpha a composition with
// |alpha| = |lambda| (else rejected). Evaluated by a frontier sweep over the
// content: state = intermediate partition, transitions = broken rim hook
// additions of the next part's length.
TPoly hecke_character(const Partition& lambda, const std::vector<int>& alpha);

// Skew character chi_t^{lambda/mu}(alpha); zero when mu is not contained in
// lambda or the weights do not match.
TPoly skew_hecke_character(const Partition& lambda, const Partition& mu,
                           const std::vector<int>& alpha);

// One frontier sweep: coefficients of every endpoint reachable from mu with
// the given content. This is the column map alpha -> (lambda -> chi^{lambda/mu}(alpha)).
std::map<Partition, TPoly> hecke_character_column(const Partition& mu,
                                                  const std::vector<int>& alpha);

// Full m-th character table: table[lambda][alpha] over partitions of m in
// canonical order. Columns are independent; `parallel` switches the OpenMP
// sweep on (results are identical either way, the serial path is the
// reference).
struct CharacterTable {
    int m = 0;
    std::vector<Partition> labels;  // row = irreducible, column = content class
    std::vector<std::vector<TPoly>> values;
};
CharacterTable character_table(int m, bool parallel = false);

}  // namespace cylhecke
