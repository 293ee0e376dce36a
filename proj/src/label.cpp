#include "matchcx/label.hpp"

#include <charconv>
#include <stdexcept>

namespace matchcx {

namespace {

void check_value(int v) {
  if (v < 1 || v > Ground::kMaxValue)
    throw std::invalid_argument("ground value out of range [1,63]: " + std::to_string(v));
}

}  // namespace

Ground Ground::plain(int v) {
  check_value(v);
  return Ground(static_cast<std::uint8_t>(v));
}

Ground Ground::primed(int v) {
  check_value(v);
  return Ground(static_cast<std::uint8_t>(v | 0x40));
}

std::string Ground::to_string() const {
  auto s = std::to_string(value());
  if (is_primed()) s += '\'';
  return s;
}

Ground Ground::parse(std::string_view s) {
  bool primed = !s.empty() && s.back() == '\'';
  if (primed) s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad ground element: " + std::string(s));
  return primed ? Ground::primed(v) : plain(v);
}

VertexLabel::VertexLabel(Ground a, Ground b) {
  if (a == b) throw std::invalid_argument("vertex label needs two distinct ground elements");
  if (b < a) std::swap(a, b);
  key_ = static_cast<std::uint16_t>((a.code() << 8) | b.code());
}

VertexLabel VertexLabel::edge(int i, int j) { return VertexLabel(Ground::plain(i), Ground::plain(j)); }

VertexLabel VertexLabel::rook(int i, int j) { return VertexLabel(Ground::plain(i), Ground::primed(j)); }

VertexLabel::Kind VertexLabel::kind() const {
  return (!lo().is_primed() && hi().is_primed()) ? Kind::Rook : Kind::GraphEdge;
}

int VertexLabel::row() const {
  if (kind() != Kind::Rook) throw std::invalid_argument("row() on a graph-edge label");
  return lo().value();
}

int VertexLabel::col() const {
  if (kind() != Kind::Rook) throw std::invalid_argument("col() on a graph-edge label");
  return hi().value();
}

std::string VertexLabel::to_string() const { return lo().to_string() + "-" + hi().to_string(); }

VertexLabel VertexLabel::parse(std::string_view s) {
  auto dash = s.find('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("bad vertex label: " + std::string(s));
  return VertexLabel(Ground::parse(s.substr(0, dash)), Ground::parse(s.substr(dash + 1)));
}

}  // namespace matchcx
