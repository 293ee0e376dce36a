#include "matchcx/spec.hpp"

#include <regex>
#include <stdexcept>

#include "matchcx/boards.hpp"

namespace matchcx {

namespace {

int to_int(const std::string& s, const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("complex spec '" + text + "': bad number '" + s + "'");
  return v;
}

}  // namespace

ComplexSpec ComplexSpec::parse(const std::string& text) {
  ComplexSpec s;
  std::string body = text;
  static const std::regex skel(R"(^(.*)[;+]skeleton=(-?\d+)$)");
  std::smatch m;
  if (std::regex_match(text, m, skel)) {
    body = m[1].str();
    s.skeleton = to_int(m[2].str(), text);
    if (*s.skeleton < -1) throw std::invalid_argument("complex spec '" + text + "': skeleton must be >= -1");
  }
  auto colon = body.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("complex spec '" + text + "': expected scheme:params");
  s.scheme = body.substr(0, colon);
  std::string arg = body.substr(colon + 1);
  if (s.scheme == "matching" || s.scheme == "diag" || s.scheme == "bboard") {
    s.params = {to_int(arg, text)};
  } else if (s.scheme == "chess") {
    auto x = arg.find('x');
    if (x == std::string::npos) throw std::invalid_argument("complex spec '" + text + "': chess needs MxN");
    s.params = {to_int(arg.substr(0, x), text), to_int(arg.substr(x + 1), text)};
  } else if (s.scheme == "gamma") {
    auto c = arg.find(',');
    if (c == std::string::npos) throw std::invalid_argument("complex spec '" + text + "': gamma needs N,K");
    s.params = {to_int(arg.substr(0, c), text), to_int(arg.substr(c + 1), text)};
  } else if (s.scheme == "board") {
    if (arg.empty()) throw std::invalid_argument("complex spec '" + text + "': board needs a path");
    s.path = arg;
  } else {
    throw std::invalid_argument("complex spec '" + text + "': unknown scheme '" + s.scheme + "'");
  }
  for (int p : s.params)
    if (p < 0 || p > Ground::kMaxValue) throw std::invalid_argument("complex spec '" + text + "': parameter out of range");
  return s;
}

std::string ComplexSpec::to_string() const {
  std::string out = scheme + ":";
  if (scheme == "chess") out += std::to_string(params[0]) + "x" + std::to_string(params[1]);
  else if (scheme == "gamma") out += std::to_string(params[0]) + "," + std::to_string(params[1]);
  else if (scheme == "board") out += path;
  else out += std::to_string(params[0]);
  if (skeleton) out += ";skeleton=" + std::to_string(*skeleton);
  return out;
}

std::optional<int> ComplexSpec::nu() const {
  if (scheme == "matching") return nu_matching(params[0]);
  if (scheme == "chess") return nu_chess(params[0], params[1]);
  if (scheme == "diag" || scheme == "bboard") return nu_matching(2 * params[0]);
  return std::nullopt;
}

Complex ComplexSpec::build(int max_dim) const {
  int d = max_dim;
  if (skeleton) d = d < -1 ? *skeleton : std::min(d, *skeleton);
  Complex c;
  if (scheme == "matching") c = matching_complex(params[0], d);
  else if (scheme == "chess") c = chessboard_complex(params[0], params[1], d);
  else if (scheme == "diag") c = board_complex(diagonal_deleted(params[0]), d);
  else if (scheme == "gamma") c = board_complex(gamma_board(params[0], params[1]), d);
  else if (scheme == "bboard") c = board_complex(b_board(params[0]), d);
  else if (scheme == "board") c = board_complex(BoardMask::load(path), d);
  else throw std::invalid_argument("complex spec: unknown scheme '" + scheme + "'");
  c.set_name(to_string());
  return c;
}

std::string GoldenEntry::spec() const {
  if (m > 0) return "chess:" + std::to_string(m) + "x" + std::to_string(n);
  return (m == 0 ? "matching:" : "diag:") + std::to_string(n);
}

int GoldenEntry::dim() const { return *ComplexSpec::parse(spec()).nu(); }

namespace {

GoldenTable make_matching() {
  GoldenTable t{"matching", {}};
  const char* vals[] = {"0", "Z^2", "Z^2", "Z^6", "Z^16", "Z_3", "Z^132", "Z^42 + Z_3^8", "Z_3"};
  for (int n = 2; n <= 10; ++n) t.entries.push_back({0, n, vals[n - 2], GoldenTier::Required});
  t.entries.push_back({0, 11, "Z^1188 + Z_3^45", GoldenTier::Stretch});
  t.entries.push_back({0, 12, "Z_3^56", GoldenTier::Beyond});
  t.entries.push_back({0, 13, "Z_3", GoldenTier::Beyond});
  t.entries.push_back({0, 14, "", GoldenTier::Unknown});
  return t;
}

GoldenTable make_chess() {
  GoldenTable t{"chess", {}};
  struct Row {
    int m;
    std::vector<const char*> vals;  // n = m .. 8
  };
  const std::vector<Row> rows = {
      {2, {"Z", "Z", "Z^5", "Z^11", "Z^19", "Z^29", "Z^41"}},
      {3, {"Z^4", "Z^2", "Z^14", "Z^47", "Z^104", "Z^191"}},
      {4, {"Z^15", "Z^20", "Z^5", "Z^225", "Z^641"}},
      {5, {"Z_3", "Z^152", "Z^98", "Z^14"}},
      {6, {"Z^25 + Z_3^10", "Z_3", "Z^1316"}},
      {7, {"Z^588 + Z_3^66", ""}},
  };
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.vals.size(); ++i) {
      int n = r.m + static_cast<int>(i);
      GoldenTier tier = GoldenTier::Required;
      if (n == 8 || r.m == 7) tier = GoldenTier::Stretch;
      if (std::string(r.vals[i]).empty()) tier = GoldenTier::Unknown;
      t.entries.push_back({r.m, n, r.vals[i], tier});
    }
  return t;
}

GoldenTable make_diag() {
  GoldenTable t{"diag", {}};
  const char* vals[] = {"0", "Z^2", "Z^4", "Z"};
  for (int n = 2; n <= 5; ++n) t.entries.push_back({-1, n, vals[n - 2], GoldenTier::Required});
  t.entries.push_back({-1, 6, "Z^24 + Z_3^5", GoldenTier::Stretch});
  t.entries.push_back({-1, 7, "Z^415 + Z_3^15", GoldenTier::Beyond});
  return t;
}

}  // namespace

const GoldenTable& golden_table(const std::string& name) {
  static const GoldenTable matching = make_matching();
  static const GoldenTable chess = make_chess();
  static const GoldenTable diag = make_diag();
  if (name == "matching") return matching;
  if (name == "chess") return chess;
  if (name == "diag") return diag;
  throw std::invalid_argument("unknown table '" + name + "' (matching, chess, diag)");
}

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names = {"matching", "chess", "diag"};
  return names;
}

}  // namespace matchcx
