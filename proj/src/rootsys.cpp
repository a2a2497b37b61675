#include "lierigid/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lierigid/linalg.hpp"

namespace lierigid {

Weight::Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {
  dominant_integral_ = std::all_of(coords_.begin(), coords_.end(),
                                   [](const Rational& c) { return c >= 0 && is_integer(c); });
}

Weight Weight::from_ints(const std::vector<int>& coords) {
  std::vector<Rational> c(coords.begin(), coords.end());
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

NodeSet Weight::support() const {
  NodeSet s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) s.insert(static_cast<int>(i) + 1);
  return s;
}

Weight Weight::operator+(const Weight& other) const {
  std::vector<Rational> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& other) const {
  std::vector<Rational> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return Weight(std::move(c));
}

Weight Weight::operator-() const {
  std::vector<Rational> c = coords_;
  for (auto& x : c) x = -x;
  return Weight(std::move(c));
}

std::vector<std::string> Weight::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(to_string(c));
  return out;
}

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;  // 0-based, local to the factor
  std::vector<Rational> lengths;
};

Diagram diagram(char type, int r) {
  Diagram d;
  d.lengths.assign(static_cast<std::size_t>(r), 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A':
      chain(r);
      break;
    case 'B':
      chain(r);
      if (r >= 2)
        for (int i = 0; i < r - 1; ++i) d.lengths[static_cast<std::size_t>(i)] = 2;
      break;
    case 'C':
      chain(r);
      if (r >= 2) d.lengths[static_cast<std::size_t>(r - 1)] = 2;
      break;
    case 'D':
      chain(r - 1);
      d.edges.emplace_back(r - 3, r - 1);
      break;
    case 'E':
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < r; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      d.lengths = {2, 2, 1, 1};
      break;
    case 'G':
      chain(2);
      d.lengths = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

void validate_factor(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 1; break;
    case 'C': ok = rank >= 1; break;
    case 'D': ok = rank >= 2; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw Error("invalid simple factor " + std::string(1, type) + std::to_string(rank) +
                ": expected A>=1, B>=1, C>=1, D>=2, E6-E8, F4 or G2");
}

}  // namespace

RootSystem build_root_system(const std::vector<std::pair<char, int>>& requested) {
  if (requested.empty()) throw Error("empty root system");
  std::vector<std::pair<char, int>> factors;
  for (auto [type, rank] : requested) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    validate_factor(type, rank);
    if (type == 'D' && rank == 2) {
      factors.emplace_back('A', 1);
      factors.emplace_back('A', 1);
    } else {
      factors.emplace_back(type, rank);
    }
  }

  RootSystem rs;
  int offset = 0;
  for (auto [type, rank] : factors) {
    rs.factors_.push_back(Factor{type, rank, offset});
    offset += rank;
  }
  const int n = offset;
  rs.rank_ = n;
  rs.cartan_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  rs.lengths_.assign(static_cast<std::size_t>(n), 1);

  for (const auto& f : rs.factors_) {
    const Diagram d = diagram(f.type, f.rank);
    for (int i = 0; i < f.rank; ++i) {
      rs.lengths_[static_cast<std::size_t>(f.offset + i)] = d.lengths[static_cast<std::size_t>(i)];
      rs.cartan_[static_cast<std::size_t>(f.offset + i)][static_cast<std::size_t>(f.offset + i)] = 2;
    }
    for (auto [a, b] : d.edges) {
      const Rational& la = d.lengths[static_cast<std::size_t>(a)];
      const Rational& lb = d.lengths[static_cast<std::size_t>(b)];
      const Rational ip = -std::max(la, lb) / 2;  // (alpha_a, alpha_b)
      const Rational ab = 2 * ip / la;
      const Rational ba = 2 * ip / lb;
      rs.cartan_[static_cast<std::size_t>(f.offset + a)][static_cast<std::size_t>(f.offset + b)] =
          static_cast<int>(ab.get_num().get_si());
      rs.cartan_[static_cast<std::size_t>(f.offset + b)][static_cast<std::size_t>(f.offset + a)] =
          static_cast<int>(ba.get_num().get_si());
    }
  }

  // Breadth-first closure by height using root strings: for beta and simple
  // alpha_i, the alpha_i-string beta - p alpha_i .. beta + q alpha_i has
  // p - q = <beta, alpha_i^vee>.
  std::vector<std::vector<Root>> by_height(1);
  std::set<Root> seen;
  for (int i = 0; i < n; ++i) {
    Root r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] = 1;
    by_height[0].push_back(r);
    seen.insert(r);
  }
  for (std::size_t h = 0; !by_height[h].empty(); ++h) {
    std::set<Root> next;
    for (const Root& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        Root simple(static_cast<std::size_t>(n), 0);
        simple[static_cast<std::size_t>(i)] = 1;
        if (beta == simple) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j)
          pairing += beta[static_cast<std::size_t>(j)] * rs.cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (p - pairing > 0) {
          Root up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          next.insert(up);
        }
      }
    }
    by_height.emplace_back(next.rbegin(), next.rend());
    for (const auto& r : next) seen.insert(r);
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<>());
    for (auto& r : level) rs.roots_.push_back(r);
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_.emplace(rs.roots_[k], static_cast<int>(k));

  for (const auto& f : rs.factors_) {
    const Root* best = nullptr;
    int best_h = -1;
    for (const auto& r : rs.roots_) {
      bool outside = false;
      for (int i = 0; i < n; ++i)
        if ((i < f.offset || i >= f.offset + f.rank) && r[static_cast<std::size_t>(i)] != 0) outside = true;
      if (outside) continue;
      const int h = std::accumulate(r.begin(), r.end(), 0);
      if (h > best_h) {
        best_h = h;
        best = &r;
      }
    }
    rs.highest_.push_back(*best);
  }

  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rs.cartan(i, j);
  rs.inv_cartan_ = inverse(c);
  return rs;
}

int RootSystem::root_index(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int root) const {
  const Root& r = roots_[static_cast<std::size_t>(root)];
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::factor_of_node(int node0) const {
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (node0 >= factors_[k].offset && node0 < factors_[k].offset + factors_[k].rank) return static_cast<int>(k);
  throw Error("node index out of range");
}

Rational RootSystem::pairing(const Weight& lambda, int root) const {
  const Root& c = roots_[static_cast<std::size_t>(root)];
  Rational num = 0;
  Rational norm = 0;
  for (int i = 0; i < rank_; ++i) {
    const auto ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    num += ci * lambda[static_cast<std::size_t>(i)] * lengths_[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank_; ++j)
      norm += ci * c[static_cast<std::size_t>(j)] * cartan(i, j) * lengths_[static_cast<std::size_t>(i)] / 2;
  }
  return num / norm;
}

Weight RootSystem::root_as_weight(const Root& r) const {
  std::vector<Rational> w(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(j)] * cartan(i, j);
  return Weight(std::move(w));
}

std::string RootSystem::label() const {
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += "x";
    s += factors_[k].label();
  }
  return s;
}

std::vector<std::pair<char, int>> parse_type(std::string_view text) {
  std::vector<std::pair<char, int>> out;
  std::size_t pos = 0;
  const std::string t(text);
  while (pos <= t.size()) {
    std::size_t next = t.find_first_of("xX*", pos);
    std::string part = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }), part.end());
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      throw Error("malformed type string '" + t + "'");
    for (std::size_t i = 1; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw Error("malformed type string '" + t + "'");
    out.emplace_back(static_cast<char>(std::toupper(static_cast<unsigned char>(part[0]))), std::stoi(part.substr(1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

RootSystem root_system(std::string_view text) { return build_root_system(parse_type(text)); }

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Weight parse_weight(const RootSystem& rs, std::string_view text) {
  std::vector<Rational> coords;
  const auto blocks = split(text, 'x');
  if (blocks.size() > 1 && blocks.size() != rs.factors().size())
    throw Error("weight '" + std::string(text) + "' has " + std::to_string(blocks.size()) + " blocks but type " +
                rs.label() + " has " + std::to_string(rs.factors().size()) + " factors");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Rational> block;
    for (const auto& item : split(blocks[b], ',')) block.push_back(parse_rational(item));
    if (blocks.size() > 1 && static_cast<int>(block.size()) != rs.factors()[b].rank)
      throw Error("weight block " + std::to_string(b + 1) + " has length " + std::to_string(block.size()) +
                  ", factor " + rs.factors()[b].label() + " needs " + std::to_string(rs.factors()[b].rank));
    coords.insert(coords.end(), block.begin(), block.end());
  }
  if (static_cast<int>(coords.size()) != rs.rank())
    throw Error("weight '" + std::string(text) + "' has length " + std::to_string(coords.size()) + ", expected " +
                std::to_string(rs.rank()));
  return Weight(std::move(coords));
}

std::string format_weight(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank()) throw Error("weight length does not match the rank");
  std::string out;
  const auto items = w.to_strings();
  for (const auto& f : rs.factors()) {
    if (f.offset > 0) out += 'x';
    for (int i = 0; i < f.rank; ++i) out += (i ? "," : "") + items[static_cast<std::size_t>(f.offset + i)];
  }
  return out;
}

NodeSet parse_nodes(const RootSystem& rs, std::string_view text) {
  NodeSet nodes;
  for (const auto& item : split(text, ',')) {
    const Rational v = parse_rational(item);
    if (!is_integer(v) || v < 1 || v > rs.rank())
      throw Error("node '" + item + "' out of range 1.." + std::to_string(rs.rank()));
    nodes.insert(static_cast<int>(v.get_num().get_si()));
  }
  return nodes;
}

Weight zero_weight(const RootSystem& rs) { return Weight(std::vector<Rational>(static_cast<std::size_t>(rs.rank()), 0)); }

Weight fundamental_weight(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank()) throw Error("node " + std::to_string(node) + " out of range");
  std::vector<Rational> c(static_cast<std::size_t>(rs.rank()), 0);
  c[static_cast<std::size_t>(node - 1)] = 1;
  return Weight(std::move(c));
}

Weight rho(const RootSystem& rs) { return Weight(std::vector<Rational>(static_cast<std::size_t>(rs.rank()), 1)); }

Weight weight_for_nodes(const RootSystem& rs, const NodeSet& nodes) {
  std::vector<Rational> c(static_cast<std::size_t>(rs.rank()), 0);
  for (int j : nodes) {
    if (j < 1 || j > rs.rank()) throw Error("node " + std::to_string(j) + " out of range");
    c[static_cast<std::size_t>(j - 1)] = 1;
  }
  return Weight(std::move(c));
}

std::vector<Rational> weight_in_root_basis(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank()) throw Error("weight length does not match rank");
  const auto& inv = rs.inverse_cartan();
  std::vector<Rational> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) c[i] += inv[i][j] * w[j];
  return c;
}

Weight dual_weight(const RootSystem& rs, const Weight& pi) {
  if (static_cast<int>(pi.size()) != rs.rank()) throw Error("weight length does not match rank");
  if (!pi.dominant_integral()) throw Error("dual_weight requires a dominant integral weight");
  std::vector<Rational> c = pi.coords();
  for (const auto& f : rs.factors()) {
    auto at = [&](int local) -> Rational& { return c[static_cast<std::size_t>(f.offset + local - 1)]; };
    if (f.type == 'A') {
      std::reverse(c.begin() + f.offset, c.begin() + f.offset + f.rank);
    } else if (f.type == 'D' && f.rank % 2 == 1) {
      std::swap(at(f.rank - 1), at(f.rank));
    } else if (f.type == 'E' && f.rank == 6) {
      std::swap(at(1), at(6));
      std::swap(at(3), at(5));
    }
  }
  return Weight(std::move(c));
}

Integer weyl_dim(const RootSystem& rs, const Weight& pi) {
  if (static_cast<int>(pi.size()) != rs.rank()) throw Error("weight length does not match rank");
  if (!pi.dominant_integral()) throw Error("weyl_dim requires a dominant integral weight");
  Rational d = 1;
  for (const auto& beta : rs.positive_roots()) {
    Rational num = 0;
    Rational den = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      const int cj = beta[static_cast<std::size_t>(j)];
      if (cj == 0) continue;
      num += cj * (pi[static_cast<std::size_t>(j)] + 1) * rs.root_length(j);
      den += cj * rs.root_length(j);
    }
    d *= num / den;
  }
  if (!is_integer(d)) throw Error("internal: Weyl dimension is not an integer");
  return d.get_num();
}

}  // namespace lierigid
