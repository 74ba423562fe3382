#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bss/cost.hpp"
#include "bss/domains/toh.hpp"

namespace bss {

// Additive pattern database for one disjoint disk group of a 4-peg Towers
// of Hanoi instance: exact minimal group-disk move counts from every
// abstract configuration to the anchor's projection. Immutable after build
// and safe to share read-only.
class PdbTable {
public:
    PdbTable(int n_disks, std::vector<std::uint8_t> group, const TohState& anchor,
             std::vector<std::uint8_t> entries);

    int n_disks() const { return n_disks_; }
    const std::vector<std::uint8_t>& group() const { return group_; }
    std::uint64_t group_mask() const { return group_mask_; }
    std::uint64_t anchor_index() const { return anchor_index_; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    // Base-4 index of the group's peg assignment within s.
    std::size_t project(const TohState& s) const;
    Cost lookup(const TohState& s) const { return entries_[project(s)]; }

private:
    int n_disks_;
    std::vector<std::uint8_t> group_;    // disk indices, ascending
    std::uint64_t group_mask_;
    std::uint64_t anchor_index_;
    std::vector<std::uint8_t> entries_;
};

// Builds the table by uniform-cost (breadth-first, unit edges) search over
// the abstract space containing only the group's disks. Group size is
// capped at kTohMaxDisks; larger groups are a resource error.
PdbTable build_pdb(int n_disks, const std::vector<std::uint8_t>& group, const TohState& anchor);

// Sum of per-group lookups. The tables' groups must partition all disks;
// a partition mismatch is a configuration error.
Cost additive_h(const TohState& s, const std::vector<std::shared_ptr<const PdbTable>>& tables);

// "(a+b)" convention: the a largest disks in one group, the b smallest in
// the other. a + b must equal n_disks.
std::vector<std::vector<std::uint8_t>> partition_groups(int n_disks, int a, int b);

// Disk cache, little-endian 8-bit entries behind a small header. Returns an
// empty pointer when the file is missing; malformed files are an error.
std::string pdb_cache_file_name(int n_disks, const PdbTable& table);
std::string pdb_cache_file_name(int n_disks, const std::vector<std::uint8_t>& group,
                                const TohState& anchor);
void save_pdb(const PdbTable& table, const std::string& path);
std::shared_ptr<const PdbTable> load_pdb(const std::string& path);

// Build-or-load against a cache directory; an empty directory name always
// builds in memory.
std::shared_ptr<const PdbTable> get_pdb(int n_disks, const std::vector<std::uint8_t>& group,
                                        const TohState& anchor, const std::string& cache_dir);

} // namespace bss
