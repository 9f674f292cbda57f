#ifndef TFS_JOBFILE_HPP
#define TFS_JOBFILE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tfs/permgroup.hpp"
#include "tfs/series.hpp"
#include "tfs/tower.hpp"

namespace tfs {

/// A parsed batch job: one group declaration, any number of series over it,
/// and optionally a butterfly block of four subgroups.
///
/// Text format: `#` comments, `name {` ... `}` sections, `key = value` lines.
///
///   group {                     group {
///     kind = perm                 kind = tower
///     degree = 6                  bound = w
///     gen = (0 1 2 3 4 5)         label = [0,1) C3
///   }                             label = [1,w) C2
///                               }
///   series {                    series {
///     step =                      bijection = identity
///     step = (0 2 4)(1 3 5)       move = [0,1) end
///     step = (0 1 2 3 4 5)      }
///   }                           series {
///   zassenhaus {                  step =
///     first_outer = (0 1 2)       step = [0,2)
///     first_inner = ...           step = [0,w)
///     second_outer = ...        }
///     second_inner = ...
///   }
///
/// Permutation steps list `;`-separated generators in disjoint-cycle text;
/// an empty value is the trivial subgroup. Tower steps are interval sets.
/// A series block gives either `step` lines or a `bijection`/`move` clause.
struct JobSpec {
  std::variant<PermGroup, TowerGroup> group;
  std::vector<Series> series;
  struct ZassenhausSpec {
    PermGroup first_outer;
    PermGroup first_inner;
    PermGroup second_outer;
    PermGroup second_inner;
  };
  std::optional<ZassenhausSpec> zassenhaus;

  bool is_perm() const { return std::holds_alternative<PermGroup>(group); }
  const PermGroup& perm_group() const { return std::get<PermGroup>(group); }
  const TowerGroup& tower_group() const { return std::get<TowerGroup>(group); }
};

/// ParseError (with line-bearing message) on malformed text; DomainError when
/// a series names generators outside the declared group.
JobSpec parse_job(const std::string& text);
JobSpec load_job(const std::string& path);

}  // namespace tfs

#endif
