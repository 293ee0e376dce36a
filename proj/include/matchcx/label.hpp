#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace matchcx {

/// A ground element: a plain integer i or a primed integer j' (column tag).
/// Values live in [1, 63]; plain elements order before primed ones.
class Ground {
 public:
  static constexpr int kMaxValue = 63;

  constexpr Ground() = default;
  static Ground plain(int v);
  static Ground primed(int v);
  static constexpr Ground from_code(std::uint8_t code) { return Ground(code); }

  constexpr int value() const { return code_ & 0x3f; }
  constexpr bool is_primed() const { return (code_ & 0x40) != 0; }
  constexpr std::uint8_t code() const { return code_; }

  std::string to_string() const;
  static Ground parse(std::string_view s);

  constexpr auto operator<=>(const Ground&) const = default;

 private:
  constexpr explicit Ground(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

/// A vertex of a matching-type complex: an edge {a, b} between two distinct
/// ground elements. A rook label (i, j') is the edge between plain i and primed j.
class VertexLabel {
 public:
  enum class Kind { GraphEdge, Rook };

  constexpr VertexLabel() = default;
  VertexLabel(Ground a, Ground b);

  /// Graph edge ij of K_n.
  static VertexLabel edge(int i, int j);
  /// Rook cell (row i, column j').
  static VertexLabel rook(int i, int j);
  static constexpr VertexLabel from_key(std::uint16_t key) { return VertexLabel(key); }

  constexpr Ground lo() const { return Ground::from_code(static_cast<std::uint8_t>(key_ >> 8)); }
  constexpr Ground hi() const { return Ground::from_code(static_cast<std::uint8_t>(key_ & 0xff)); }
  Kind kind() const;
  /// Row index of a rook label.
  int row() const;
  /// Column index (without the prime) of a rook label.
  int col() const;
  bool touches(Ground g) const { return lo() == g || hi() == g; }
  constexpr std::uint16_t key() const { return key_; }

  /// "1-3" for a graph edge, "2-5'" for a rook label.
  std::string to_string() const;
  static VertexLabel parse(std::string_view s);

  constexpr auto operator<=>(const VertexLabel&) const = default;

 private:
  constexpr explicit VertexLabel(std::uint16_t key) : key_(key) {}
  std::uint16_t key_ = 0;
};

}  // namespace matchcx
