#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apnle {

/// Resumable DFS position: the candidate index chosen at every depth on the
/// current path. Little-endian binary; see write_checkpoint for the layout.
struct Checkpoint {
  static constexpr std::uint32_t kVersion = 1;
  static constexpr std::uint32_t kFinishedDepth = 0xFFFFFFFFU;

  std::uint32_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint32_t> b_rows;
  std::vector<std::uint32_t> a_rows;
  std::uint64_t config_hash = 0;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  /// True once the subtree was closed; the path is then empty.
  bool finished = false;
  struct Frame {
    std::uint32_t x;
    std::uint32_t cand_index;
  };
  std::vector<Frame> path;
};

namespace detail {

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class ByteReader {
 public:
  explicit ByteReader(const std::string& data) : data_(data) {}
  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  std::uint64_t take(int bytes) {
    if (pos_ + static_cast<std::size_t>(bytes) > data_.size()) throw std::runtime_error("checkpoint: truncated file");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(bytes);
    return v;
  }
  const std::string& data_;
  std::size_t pos_ = 0;
};

inline constexpr std::array<char, 8> kCheckpointMagic{'A', 'P', 'N', 'L', 'E', 'C', 'K', '1'};

}  // namespace detail

/// Layout: magic "APNLECK1", u32 version, u32 n, u64 p, n x u32 B rows,
/// n x u32 A rows, u64 config hash, u64 nodes, u64 solutions, u32 depth
/// (0xFFFFFFFF = finished), then depth x (u32 x, u32 cand_index).
/// Written to a temporary file and renamed into place.
inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  std::string out(detail::kCheckpointMagic.begin(), detail::kCheckpointMagic.end());
  detail::put_u32(out, Checkpoint::kVersion);
  detail::put_u32(out, c.n);
  detail::put_u64(out, c.p);
  for (auto r : c.b_rows) detail::put_u32(out, r);
  for (auto r : c.a_rows) detail::put_u32(out, r);
  detail::put_u64(out, c.config_hash);
  detail::put_u64(out, c.nodes);
  detail::put_u64(out, c.solutions);
  detail::put_u32(out, c.finished ? Checkpoint::kFinishedDepth : static_cast<std::uint32_t>(c.path.size()));
  if (!c.finished) {
    for (const auto& f : c.path) {
      detail::put_u32(out, f.x);
      detail::put_u32(out, f.cand_index);
    }
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("checkpoint: cannot open " + tmp);
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw std::runtime_error("checkpoint: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  const std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (data.size() < 8 || std::memcmp(data.data(), detail::kCheckpointMagic.data(), 8) != 0) {
    throw std::runtime_error("checkpoint: bad magic in " + path);
  }
  const std::string body = data.substr(8);
  detail::ByteReader r(body);
  if (r.u32() != Checkpoint::kVersion) throw std::runtime_error("checkpoint: unsupported version in " + path);
  Checkpoint c;
  c.n = r.u32();
  if (c.n < 1 || c.n > 32) throw std::runtime_error("checkpoint: bad dimension in " + path);
  c.p = r.u64();
  for (std::uint32_t i = 0; i < c.n; ++i) c.b_rows.push_back(r.u32());
  for (std::uint32_t i = 0; i < c.n; ++i) c.a_rows.push_back(r.u32());
  c.config_hash = r.u64();
  c.nodes = r.u64();
  c.solutions = r.u64();
  const std::uint32_t depth = r.u32();
  if (depth == Checkpoint::kFinishedDepth) {
    c.finished = true;
  } else {
    for (std::uint32_t i = 0; i < depth; ++i) {
      const std::uint32_t x = r.u32();
      c.path.push_back({x, r.u32()});
    }
  }
  if (!r.at_end()) throw std::runtime_error("checkpoint: trailing bytes in " + path);
  return c;
}

}  // namespace apnle
