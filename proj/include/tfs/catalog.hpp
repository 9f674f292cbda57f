#ifndef TFS_CATALOG_HPP
#define TFS_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tfs/permgroup.hpp"

namespace tfs {

/// One isomorphism type of a small finite group, with a faithful permutation
/// representation.
struct CatalogEntry {
  std::string name;
  std::uint32_t order;
  PermGroup group;
};

/// Every isomorphism type of order <= 24 (74 groups), sorted by order then
/// name. Built once; later calls return the cached copy.
const std::vector<CatalogEntry>& small_group_catalog();

/// Entry lookup by name; DomainError when absent.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace tfs

#endif
