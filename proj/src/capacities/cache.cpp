#include "stair/capacities.hpp"
#include "stair/error.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <fstream>

namespace stair {

namespace {

constexpr std::array<char, 8> kMagic = {'S', 'T', 'R', 'C', 'A', 'P', '0', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::ostream& os, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(is.get())) << (8 * i);
    return v;
}
std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(is.get())) << (8 * i);
    return v;
}

// signed value: u32 byte count, then magnitude bytes little-endian; the top bit of the count is the sign
void put_int(std::ostream& os, std::int64_t v) {
    std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    std::uint32_t nbytes = 0;
    for (std::uint64_t t = mag; t; t >>= 8) ++nbytes;
    put_u32(os, nbytes | (v < 0 ? 0x80000000u : 0u));
    for (std::uint32_t i = 0; i < nbytes; ++i) os.put(static_cast<char>((mag >> (8 * i)) & 0xff));
}
std::int64_t get_int(std::istream& is) {
    std::uint32_t head = get_u32(is);
    bool neg = head & 0x80000000u;
    std::uint32_t nbytes = head & 0x7fffffffu;
    if (nbytes > 8) throw DomainError("cache entry too wide");
    std::uint64_t mag = 0;
    for (std::uint32_t i = 0; i < nbytes; ++i)
        mag |= static_cast<std::uint64_t>(static_cast<unsigned char>(is.get())) << (8 * i);
    return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

}  // namespace

void save_sequence(const std::filesystem::path& file, const std::string& key, const CapacitySequence& seq) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw DomainError("cannot write cache file " + file.string());
    os.write(kMagic.data(), kMagic.size());
    put_u32(os, static_cast<std::uint32_t>(key.size()));
    os.write(key.data(), static_cast<std::streamsize>(key.size()));
    put_u64(os, seq.size());
    put_u64(os, seq.certified_len());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        put_int(os, seq.numerator(k));
        put_int(os, seq.denominator());
    }
}

std::optional<CapacitySequence> load_sequence(const std::filesystem::path& file, const std::string& key) {
    std::ifstream is(file, std::ios::binary);
    if (!is) return std::nullopt;
    std::array<char, 8> magic{};
    is.read(magic.data(), magic.size());
    if (!is || magic != kMagic) return std::nullopt;
    std::uint32_t klen = get_u32(is);
    if (klen > (1u << 20)) return std::nullopt;
    std::string stored(klen, '\0');
    is.read(stored.data(), klen);
    if (!is || stored != key) return std::nullopt;
    std::uint64_t n = get_u64(is), cert = get_u64(is);
    std::vector<std::int64_t> num(n);
    std::int64_t den = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        num[k] = get_int(is);
        std::int64_t d = get_int(is);
        if (k == 0) den = d;
        if (d != den) return std::nullopt;
    }
    if (!is) return std::nullopt;
    return CapacitySequence(std::move(num), den, cert);
}

CapacitySequence ech_convex_toric_cached(const NegativeWeightExpansion& X, std::size_t count,
                                         const std::filesystem::path& cache_dir) {
    std::string key = X.to_string() + "#" + std::to_string(count);
    std::string fname;
    for (char c : key) fname += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    std::filesystem::path file = cache_dir / (fname + ".cap");
    if (auto hit = load_sequence(file, key)) return *hit;
    CapacitySequence seq = ech_convex_toric(X, count);
    std::filesystem::create_directories(cache_dir);
    save_sequence(file, key, seq);
    return seq;
}

}  // namespace stair
