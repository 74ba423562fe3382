#include "bss/pdb.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace bss {

namespace {

constexpr char kMagic[8] = {'T', 'O', 'H', 'P', 'D', 'B', '1', '\0'};

std::uint64_t mask_of(const std::vector<std::uint8_t>& group) {
    std::uint64_t m = 0;
    for (std::uint8_t d : group) m |= 1ull << d;
    return m;
}

// Abstract state index: base-4 over the group's disks in ascending rank.
std::size_t project_group(const TohState& s, const std::vector<std::uint8_t>& group) {
    std::size_t idx = 0;
    for (std::size_t r = group.size(); r-- > 0;) idx = idx * 4 + s.pegs[group[r]];
    return idx;
}

} // namespace

PdbTable::PdbTable(int n_disks, std::vector<std::uint8_t> group, const TohState& anchor,
                   std::vector<std::uint8_t> entries)
    : n_disks_(n_disks), group_(std::move(group)), entries_(std::move(entries)) {
    group_mask_ = mask_of(group_);
    anchor_index_ = project_group(anchor, group_);
    if (entries_.size() != (std::size_t{1} << (2 * group_.size())))
        throw std::invalid_argument("pdb: entry count does not match group size");
    if (entries_[anchor_index_] != 0)
        throw std::invalid_argument("pdb: anchor entry must be zero");
}

std::size_t PdbTable::project(const TohState& s) const { return project_group(s, group_); }

PdbTable build_pdb(int n_disks, const std::vector<std::uint8_t>& group, const TohState& anchor) {
    if (n_disks < 1 || n_disks > kTohMaxDisks)
        throw std::invalid_argument("pdb: disk count out of range");
    if (group.empty() || group.size() > kTohMaxDisks)
        throw std::length_error("pdb: group size out of range");
    for (std::uint8_t d : group)
        if (d >= n_disks) throw std::invalid_argument("pdb: disk index out of range");
    std::vector<std::uint8_t> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("pdb: duplicate disk in group");

    const int k = static_cast<int>(sorted.size());
    const std::size_t size = std::size_t{1} << (2 * k);
    std::vector<std::uint8_t> dist(size, 0xFF);

    // Breadth-first over the abstract space: rank r movable iff no higher
    // rank (smaller disk) shares its peg; target peg must hold no higher
    // rank either. Unit edges, and moves are symmetric, so a backward
    // search from the anchor gives distances to it.
    const std::size_t start = project_group(anchor, sorted);
    dist[start] = 0;
    std::deque<std::size_t> queue{start};
    int pegs[kTohMaxDisks];
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        std::uint8_t d0 = dist[cur];
        std::size_t rest = cur;
        for (int r = 0; r < k; ++r) {
            pegs[r] = static_cast<int>(rest & 0x3);
            rest >>= 2;
        }
        int top[kTohPegs] = {-1, -1, -1, -1};
        for (int r = 0; r < k; ++r) top[pegs[r]] = r;
        for (int p = 0; p < kTohPegs; ++p) {
            int r = top[p];
            if (r < 0) continue;
            for (int q = 0; q < kTohPegs; ++q) {
                if (q == p || (top[q] >= 0 && top[q] > r)) continue;
                std::size_t next = cur - (static_cast<std::size_t>(p) << (2 * r)) +
                                   (static_cast<std::size_t>(q) << (2 * r));
                if (dist[next] == 0xFF) {
                    if (d0 == 0xFE) throw std::overflow_error("pdb: distance exceeds 8 bits");
                    dist[next] = static_cast<std::uint8_t>(d0 + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    for (std::uint8_t d : dist)
        if (d == 0xFF) throw std::logic_error("pdb: abstract space not fully reached");
    return PdbTable(n_disks, sorted, anchor, std::move(dist));
}

Cost additive_h(const TohState& s, const std::vector<std::shared_ptr<const PdbTable>>& tables) {
    std::uint64_t covered = 0;
    Cost total = 0;
    for (const auto& t : tables) {
        if (!t || t->n_disks() != s.n)
            throw std::invalid_argument("pdb: table does not match the instance");
        if (covered & t->group_mask())
            throw std::invalid_argument("pdb: groups overlap");
        covered |= t->group_mask();
        total = checked_add(total, t->lookup(s));
    }
    if (covered != (s.n == 64 ? ~0ull : (1ull << s.n) - 1))
        throw std::invalid_argument("pdb: groups do not cover all disks");
    return total;
}

std::vector<std::vector<std::uint8_t>> partition_groups(int n_disks, int a, int b) {
    if (a <= 0 || b <= 0 || a + b != n_disks)
        throw std::invalid_argument("pdb: partition sizes must be positive and sum to the disk count");
    std::vector<std::uint8_t> largest, smallest;
    for (int d = 0; d < a; ++d) largest.push_back(static_cast<std::uint8_t>(d));
    for (int d = a; d < n_disks; ++d) smallest.push_back(static_cast<std::uint8_t>(d));
    return {largest, smallest};
}

std::string pdb_cache_file_name(int n_disks, const std::vector<std::uint8_t>& group,
                                const TohState& anchor) {
    std::uint64_t anchor_packed = 0;
    for (std::size_t r = 0; r < group.size(); ++r)
        anchor_packed |= static_cast<std::uint64_t>(anchor.pegs[group[r]]) << (2 * r);
    char buf[96];
    std::snprintf(buf, sizeof buf, "toh%dd_g%06llx_a%06llx.pdb", n_disks,
                  static_cast<unsigned long long>(mask_of(group)),
                  static_cast<unsigned long long>(anchor_packed));
    return buf;
}

std::string pdb_cache_file_name(int n_disks, const PdbTable& table) {
    TohState anchor;
    anchor.n = n_disks;
    std::uint64_t idx = table.anchor_index();
    for (std::size_t r = 0; r < table.group().size(); ++r) {
        anchor.pegs[table.group()[r]] = static_cast<std::uint8_t>(idx & 0x3);
        idx >>= 2;
    }
    return pdb_cache_file_name(n_disks, table.group(), anchor);
}

namespace {

template <typename T>
void write_le(std::ofstream& out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
}

template <typename T>
T read_le(std::ifstream& in) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        int c = in.get();
        if (c == EOF) throw std::runtime_error("pdb cache: truncated file");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return static_cast<T>(v);
}

} // namespace

void save_pdb(const PdbTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("pdb cache: cannot write " + path);
    out.write(kMagic, sizeof kMagic);
    write_le<std::uint32_t>(out, 1);
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.n_disks()));
    write_le<std::uint64_t>(out, table.group_mask());
    write_le<std::uint64_t>(out, table.anchor_index());
    out.write(reinterpret_cast<const char*>(table.entries().data()),
              static_cast<std::streamsize>(table.entries().size()));
    if (!out) throw std::runtime_error("pdb cache: write failed: " + path);
}

std::shared_ptr<const PdbTable> load_pdb(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return nullptr;
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || !std::equal(magic, magic + 8, kMagic))
        throw std::runtime_error("pdb cache: bad magic in " + path);
    std::uint32_t version = read_le<std::uint32_t>(in);
    if (version != 1) throw std::runtime_error("pdb cache: unsupported version in " + path);
    int n_disks = static_cast<int>(read_le<std::uint32_t>(in));
    std::uint64_t group_mask = read_le<std::uint64_t>(in);
    std::uint64_t anchor_index = read_le<std::uint64_t>(in);
    std::vector<std::uint8_t> group;
    for (int d = 0; d < 64; ++d)
        if (group_mask & (1ull << d)) group.push_back(static_cast<std::uint8_t>(d));
    if (group.empty() || group.size() > kTohMaxDisks || n_disks <= 0 || n_disks > kTohMaxDisks)
        throw std::runtime_error("pdb cache: bad header in " + path);
    std::vector<std::uint8_t> entries(std::size_t{1} << (2 * group.size()));
    in.read(reinterpret_cast<char*>(entries.data()), static_cast<std::streamsize>(entries.size()));
    if (!in || in.gcount() != static_cast<std::streamsize>(entries.size()))
        throw std::runtime_error("pdb cache: truncated table in " + path);
    TohState anchor;
    anchor.n = n_disks;
    for (std::size_t r = 0; r < group.size(); ++r)
        anchor.pegs[group[r]] = static_cast<std::uint8_t>((anchor_index >> (2 * r)) & 0x3);
    return std::make_shared<PdbTable>(n_disks, std::move(group), anchor, std::move(entries));
}

std::shared_ptr<const PdbTable> get_pdb(int n_disks, const std::vector<std::uint8_t>& group,
                                        const TohState& anchor, const std::string& cache_dir) {
    if (cache_dir.empty())
        return std::make_shared<PdbTable>(build_pdb(n_disks, group, anchor));
    std::filesystem::create_directories(cache_dir);
    std::filesystem::path path =
        std::filesystem::path(cache_dir) / pdb_cache_file_name(n_disks, group, anchor);
    if (auto cached = load_pdb(path.string())) return cached;
    auto table = std::make_shared<PdbTable>(build_pdb(n_disks, group, anchor));
    save_pdb(*table, path.string());
    return table;
}

} // namespace bss
