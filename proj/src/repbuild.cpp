#include "lierigid/repbuild.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <json.hpp>

namespace lierigid {

namespace {

using IntWeight = std::vector<int>;

IntWeight to_ints(const Weight& w) {
  IntWeight out;
  for (const auto& c : w.coords()) out.push_back(static_cast<int>(c.get_num().get_si()));
  return out;
}

// Column j of the Cartan matrix: fundamental-weight coordinates of alpha_j.
IntWeight simple_root_weight(const RootSystem& rs, int j) {
  IntWeight out(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) out[static_cast<std::size_t>(i)] = rs.cartan(i, j);
  return out;
}

IntWeight shifted(const IntWeight& w, const IntWeight& d, int sign) {
  IntWeight out = w;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * d[k];
  return out;
}

struct RawModule {
  std::vector<IntWeight> weights;
  std::vector<SparseMatrix> e, f;
};

// Basis of V_pi built by lowering from the highest weight vector. A
// candidate f_i b is identified with its image under (e_1, ..., e_r), which
// is injective below the top weight; the e_j images lie in distinct weight
// spaces, so one concatenated vector carries all of them.
RawModule lower_closure(const RootSystem& rs, const IntWeight& top, int dim) {
  const int r = rs.rank();
  std::vector<IntWeight> alpha;
  for (int j = 0; j < r; ++j) alpha.push_back(simple_root_weight(rs, j));

  RawModule mod;
  mod.weights.push_back(top);
  mod.e.assign(static_cast<std::size_t>(r), SparseMatrix(dim));
  mod.f.assign(static_cast<std::size_t>(r), SparseMatrix(dim));
  std::vector<int> previous{0};

  while (!previous.empty()) {
    std::map<IntWeight, std::vector<std::pair<int, int>>> candidates;
    for (int b : previous)
      for (int i = 0; i < r; ++i)
        candidates[shifted(mod.weights[static_cast<std::size_t>(b)], alpha[static_cast<std::size_t>(i)], -1)]
            .emplace_back(i, b);

    std::vector<int> current;
    for (const auto& [mu, list] : candidates) {
      TrackedEchelon ech;
      std::vector<int> created;
      for (const auto& [i, b] : list) {
        const auto& wb = mod.weights[static_cast<std::size_t>(b)];
        SparseVec image;
        for (int j = 0; j < r; ++j) {
          const auto& ejb = mod.e[static_cast<std::size_t>(j)].col(b);
          axpy(image, 1, mod.f[static_cast<std::size_t>(i)].apply(ejb));
          if (i == j && wb[static_cast<std::size_t>(i)] != 0) axpy(image, wb[static_cast<std::size_t>(i)], {{b, 1}});
        }
        auto dec = ech.decompose(image);
        auto& fcol = mod.f[static_cast<std::size_t>(i)].col(b);
        if (dec.residual.empty()) {
          for (const auto& [k, c] : dec.coeffs) fcol[created[static_cast<std::size_t>(k)]] = c;
          continue;
        }
        ech.add(image);
        const int g = static_cast<int>(mod.weights.size());
        if (g >= dim) throw Error("internal: lowering produced more vectors than the Weyl dimension");
        mod.weights.push_back(mu);
        created.push_back(g);
        current.push_back(g);
        fcol = {{g, 1}};
        for (const auto& [idx, c] : image) {
          const auto& wi = mod.weights[static_cast<std::size_t>(idx)];
          for (int j = 0; j < r; ++j)
            if (wi == shifted(mu, alpha[static_cast<std::size_t>(j)], 1)) {
              mod.e[static_cast<std::size_t>(j)].col(g)[idx] = c;
              break;
            }
        }
      }
    }
    previous = std::move(current);
  }
  if (static_cast<int>(mod.weights.size()) != dim)
    throw Error("internal: lowering produced " + std::to_string(mod.weights.size()) + " vectors, expected " +
                std::to_string(dim));
  return mod;
}

// Smallest i with beta - alpha_i a positive root, and that root's index.
std::pair<int, int> split_root(const RootSystem& rs, int root) {
  const Root& beta = rs.positive_roots()[static_cast<std::size_t>(root)];
  for (int i = 0; i < rs.rank(); ++i) {
    if (beta[static_cast<std::size_t>(i)] == 0) continue;
    Root rest = beta;
    rest[static_cast<std::size_t>(i)] -= 1;
    const int k = rs.root_index(rest);
    if (k >= 0) return {i, k};
  }
  throw Error("internal: root has no simple-root predecessor");
}

void write_matrix(nlohmann::json& j, const SparseMatrix& m) {
  j = nlohmann::json::array();
  for (int c = 0; c < m.size(); ++c)
    for (const auto& [r, v] : m.col(c)) j.push_back({r, c, to_string(v)});
}

SparseMatrix read_matrix(const nlohmann::json& j, int n) {
  SparseMatrix m(n);
  for (const auto& t : j) {
    const int r = t.at(0).get<int>();
    const int c = t.at(1).get<int>();
    if (r < 0 || r >= n || c < 0 || c >= n) throw Error("cache: matrix entry out of range");
    m.set(r, c, parse_rational(t.at(2).get<std::string>()));
  }
  return m;
}

std::vector<Rational> to_dense(const SparseVec& v, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n), 0);
  for (const auto& [i, c] : v) out[static_cast<std::size_t>(i)] = c;
  return out;
}

}  // namespace

Frame build_frame(const SparseVec& v0, const Rational& top_grade, const std::vector<SparseMatrix>& lowering,
                  const std::vector<int>& lowering_grades, int dim) {
  Frame frame;
  TrackedEchelon ech;
  if (v0.empty() || !ech.add(v0)) throw Error("frame: zero highest weight vector");
  frame.vectors.push_back(v0);
  frame.levels.push_back(0);
  frame.grades.push_back(top_grade);

  std::vector<int> previous;
  for (std::size_t a = 0; a < lowering.size(); ++a) {
    SparseVec v = lowering[a].apply(v0);
    if (!ech.add(v)) throw Error("frame: u_alpha v_0 are not independent");
    previous.push_back(static_cast<int>(frame.vectors.size()));
    frame.vectors.push_back(std::move(v));
    frame.levels.push_back(1);
    frame.grades.push_back(top_grade - lowering_grades[a]);
  }
  const std::size_t m = lowering.size();

  for (int level = 2; !previous.empty() && static_cast<int>(frame.vectors.size()) < dim; ++level) {
    std::vector<int> current;
    for (int p : previous)
      for (std::size_t a = 0; a < m; ++a) {
        SparseVec v = lowering[a].apply(frame.vectors[static_cast<std::size_t>(p)]);
        if (v.empty() || !ech.add(v)) continue;
        current.push_back(static_cast<int>(frame.vectors.size()));
        frame.grades.push_back(frame.grades[static_cast<std::size_t>(p)] - lowering_grades[a]);
        frame.vectors.push_back(std::move(v));
        frame.levels.push_back(level);
      }
    previous = std::move(current);
  }
  if (static_cast<int>(frame.vectors.size()) != dim)
    throw Error("frame: osculating spaces span " + std::to_string(frame.vectors.size()) + " of " +
                std::to_string(dim) + " dimensions");

  std::vector<std::size_t> order(frame.vectors.size() - m - 1);
  std::iota(order.begin(), order.end(), m + 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return frame.grades[a] > frame.grades[b]; });
  Frame sorted;
  for (std::size_t k = 0; k <= m; ++k) {
    sorted.vectors.push_back(frame.vectors[k]);
    sorted.levels.push_back(frame.levels[k]);
    sorted.grades.push_back(frame.grades[k]);
  }
  for (std::size_t k : order) {
    sorted.vectors.push_back(std::move(frame.vectors[k]));
    sorted.levels.push_back(frame.levels[k]);
    sorted.grades.push_back(frame.grades[k]);
  }
  return sorted;
}

SparseMatrix frame_matrix(const Frame& frame, int dim) {
  SparseMatrix p(dim);
  for (int j = 0; j < dim; ++j) p.col(j) = frame.vectors[static_cast<std::size_t>(j)];
  return p;
}

SparseMatrix in_frame(const SparseMatrix& x, const SparseMatrix& p, const SparseMatrix& p_inv) {
  return p_inv * (x * p);
}

std::string simple_label(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

std::string root_label(char kind, const Root& root) {
  std::string s(1, kind);
  s += '[';
  for (std::size_t k = 0; k < root.size(); ++k) s += (k ? "," : "") + std::to_string(root[k]);
  return s + "]";
}

const SparseMatrix& IrrepRealization::e(int i) const { return mats_.at(static_cast<std::size_t>(e_.at(static_cast<std::size_t>(i - 1)))); }
const SparseMatrix& IrrepRealization::f(int i) const { return mats_.at(static_cast<std::size_t>(f_.at(static_cast<std::size_t>(i - 1)))); }
const SparseMatrix& IrrepRealization::h(int i) const { return mats_.at(static_cast<std::size_t>(h_.at(static_cast<std::size_t>(i - 1)))); }
const SparseMatrix& IrrepRealization::root_e(int root) const {
  return mats_.at(static_cast<std::size_t>(root_e_.at(static_cast<std::size_t>(root))));
}
const SparseMatrix& IrrepRealization::root_f(int root) const {
  return mats_.at(static_cast<std::size_t>(root_f_.at(static_cast<std::size_t>(root))));
}

const SparseMatrix& IrrepRealization::generator(std::string_view label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) throw Error("unknown generator '" + std::string(label) + "'");
  return mats_[static_cast<std::size_t>(it->second)];
}

SparseMatrix& IrrepRealization::generator(std::string_view label) {
  auto it = labels_.find(label);
  if (it == labels_.end()) throw Error("unknown generator '" + std::string(label) + "'");
  return mats_[static_cast<std::size_t>(it->second)];
}

std::vector<std::string> IrrepRealization::generator_labels() const {
  std::vector<std::string> out;
  for (const auto& [label, idx] : labels_) out.push_back(label);
  return out;
}

void IrrepRealization::add_matrix(const std::string& label, SparseMatrix m) {
  labels_[label] = static_cast<int>(mats_.size());
  mats_.push_back(std::move(m));
}

void IrrepRealization::index_labels() {
  const int r = rs_.rank();
  e_.clear();
  f_.clear();
  h_.clear();
  for (int i = 1; i <= r; ++i) {
    e_.push_back(labels_.at(simple_label('e', i)));
    f_.push_back(labels_.at(simple_label('f', i)));
    h_.push_back(labels_.at(simple_label('h', i)));
  }
  root_e_.clear();
  root_f_.clear();
  for (int k = 0; k < rs_.num_positive_roots(); ++k) {
    const Root& beta = rs_.positive_roots()[static_cast<std::size_t>(k)];
    if (rs_.height(k) == 1) {
      const int i = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      labels_[root_label('e', beta)] = e_[static_cast<std::size_t>(i)];
      labels_[root_label('f', beta)] = f_[static_cast<std::size_t>(i)];
    }
    root_e_.push_back(labels_.at(root_label('e', beta)));
    root_f_.push_back(labels_.at(root_label('f', beta)));
  }
}

IrrepRealization build_irrep(const RootSystem& rs, const Weight& pi, int dim_cap) {
  if (static_cast<int>(pi.size()) != rs.rank()) throw Error("weight length does not match rank");
  if (!pi.dominant_integral()) throw Error("highest weight must be dominant integral");
  const Integer wd = weyl_dim(rs, pi);
  if (wd > dim_cap)
    throw Error("module dimension " + to_string(wd) + " exceeds the cap " + std::to_string(dim_cap));
  const int dim = static_cast<int>(wd.get_si());
  const int r = rs.rank();

  RawModule raw = lower_closure(rs, to_ints(pi), dim);

  std::vector<SparseMatrix> raw_h;
  for (int i = 0; i < r; ++i) {
    SparseMatrix h(dim);
    for (int k = 0; k < dim; ++k) h.set(k, k, raw.weights[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    raw_h.push_back(std::move(h));
  }
  std::vector<SparseMatrix> raw_re, raw_rf;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (rs.height(k) == 1) {
      const Root& beta = rs.positive_roots()[static_cast<std::size_t>(k)];
      const auto i = static_cast<std::size_t>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      raw_re.push_back(raw.e[i]);
      raw_rf.push_back(raw.f[i]);
      continue;
    }
    const auto [i, rest] = split_root(rs, k);
    raw_re.push_back(commutator(raw.e[static_cast<std::size_t>(i)], raw_re[static_cast<std::size_t>(rest)]));
    raw_rf.push_back(commutator(raw.f[static_cast<std::size_t>(i)], raw_rf[static_cast<std::size_t>(rest)]));
  }

  IrrepRealization rep;
  rep.rs_ = rs;
  rep.pi_ = pi;
  rep.nodes_ = pi.support();

  std::vector<SparseMatrix> lowering;
  Rational top = 0;
  if (!rep.nodes_.empty()) {
    const GradingProfile gp = grading_element(rs, rep.nodes_);
    std::vector<std::pair<int, int>> keyed;
    for (int k = 0; k < rs.num_positive_roots(); ++k)
      if (gp.root_grades[static_cast<std::size_t>(k)] > 0) keyed.emplace_back(gp.root_grades[static_cast<std::size_t>(k)], k);
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [s, k] : keyed) {
      rep.lowering_roots_.push_back(k);
      rep.u_grades_.push_back(s);
      lowering.push_back(raw_rf[static_cast<std::size_t>(k)]);
    }
    top = eval_E(gp, pi);
  }

  const Frame frame = build_frame({{0, 1}}, top, lowering, rep.u_grades_, dim);
  const SparseMatrix p = frame_matrix(frame, dim);
  const SparseMatrix p_inv = inverse(p);
  rep.grades_ = frame.grades;
  rep.levels_ = frame.levels;
  for (const auto& v : frame.vectors) {
    const auto& w = raw.weights[static_cast<std::size_t>(v.begin()->first)];
    std::vector<Rational> coords(w.begin(), w.end());
    rep.weights_.emplace_back(std::move(coords));
  }

  for (int i = 1; i <= r; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    rep.add_matrix(simple_label('e', i), in_frame(raw.e[k], p, p_inv));
    rep.add_matrix(simple_label('f', i), in_frame(raw.f[k], p, p_inv));
    rep.add_matrix(simple_label('h', i), in_frame(raw_h[k], p, p_inv));
  }
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (rs.height(k) == 1) continue;
    const Root& beta = rs.positive_roots()[static_cast<std::size_t>(k)];
    rep.add_matrix(root_label('e', beta), in_frame(raw_re[static_cast<std::size_t>(k)], p, p_inv));
    rep.add_matrix(root_label('f', beta), in_frame(raw_rf[static_cast<std::size_t>(k)], p, p_inv));
  }
  rep.index_labels();
  return rep;
}

std::vector<GlElement> embed_g(const IrrepRealization& rep) {
  std::vector<GlElement> out;
  const auto& rs = rep.root_system();
  for (int i = 1; i <= rs.rank(); ++i) out.push_back(rep.h(i));
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    out.push_back(rep.root_e(k));
    out.push_back(rep.root_f(k));
  }
  return out;
}

std::vector<Rational> act(const IrrepRealization& rep, std::string_view label, const std::vector<Rational>& v) {
  return act(rep, rep.generator(label), v);
}

std::vector<Rational> act(const IrrepRealization& rep, const GlElement& x, const std::vector<Rational>& v) {
  const int n = rep.dim();
  if (x.size() != n) throw Error("shape mismatch: operator of size " + std::to_string(x.size()) + " on module of dimension " + std::to_string(n));
  if (static_cast<int>(v.size()) != n)
    throw Error("shape mismatch: vector of length " + std::to_string(v.size()) + " on module of dimension " + std::to_string(n));
  SparseVec sv;
  for (int i = 0; i < n; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) sv[i] = v[static_cast<std::size_t>(i)];
  return to_dense(x.apply(sv), n);
}

RelationReport verify_relations(const IrrepRealization& rep) {
  RelationReport report;
  auto fail = [&](const std::string& what) {
    if (report.ok) report.first_violation = what;
    report.ok = false;
  };
  const auto& rs = rep.root_system();
  const int n = rep.dim();
  const int r = rs.rank();

  if (weyl_dim(rs, rep.highest_weight()) != n) fail("dimension differs from the Weyl dimension");
  for (int i = 1; i <= r && report.ok; ++i) {
    SparseMatrix diag(n);
    for (int k = 0; k < n; ++k) diag.set(k, k, rep.basis_weights()[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)]);
    if (!(rep.h(i) == diag)) fail("h" + std::to_string(i) + " is not diagonal with the basis weights");
  }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const SparseMatrix ef = commutator(rep.e(i), rep.f(j));
      if (!(ef == (i == j ? rep.h(i) : SparseMatrix(n))))
        fail("[e" + std::to_string(i) + ", f" + std::to_string(j) + "] is wrong");
      const int a = rs.cartan(i - 1, j - 1);
      if (!(commutator(rep.h(i), rep.e(j)) == rep.e(j).scaled(a)))
        fail("[h" + std::to_string(i) + ", e" + std::to_string(j) + "] is wrong");
      if (!(commutator(rep.h(i), rep.f(j)) == rep.f(j).scaled(-a)))
        fail("[h" + std::to_string(i) + ", f" + std::to_string(j) + "] is wrong");
    }
  if (!rep.nodes().empty()) {
    const GradingProfile gp = grading_element(rs, rep.nodes());
    if (rep.m() != gp.dim_g_minus()) fail("tangent dimension differs from dim g_-");
  }
  for (int a = 1; a <= rep.m(); ++a) {
    if (!(rep.u(a).col(0) == SparseVec{{a, 1}})) fail("u_" + std::to_string(a) + " v_0 is not v_" + std::to_string(a));
  }
  return report;
}

void save_realization(const IrrepRealization& rep, const std::string& path) {
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["type"] = rep.root_system().label();
  j["weight"] = rep.highest_weight().to_strings();
  j["dim"] = rep.dim();
  j["m"] = rep.m();
  auto& bw = j["basis_weights"] = nlohmann::json::array();
  for (const auto& w : rep.basis_weights()) bw.push_back(w.to_strings());
  auto& gr = j["grades"] = nlohmann::json::array();
  for (const auto& g : rep.grades()) gr.push_back(to_string(g));
  j["osculation_levels"] = rep.osculation_levels();
  j["lowering_roots"] = rep.lowering_roots();
  std::vector<int> ug;
  for (int a = 1; a <= rep.m(); ++a) ug.push_back(rep.u_grade(a));
  j["lowering_grades"] = ug;
  auto& mats = j["matrices"] = nlohmann::json::object();
  const auto& rs = rep.root_system();
  for (int i = 1; i <= rs.rank(); ++i)
    for (char kind : {'e', 'f', 'h'}) write_matrix(mats[simple_label(kind, i)], rep.generator(simple_label(kind, i)));
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (rs.height(k) == 1) continue;
    const Root& beta = rs.positive_roots()[static_cast<std::size_t>(k)];
    write_matrix(mats[root_label('e', beta)], rep.root_e(k));
    write_matrix(mats[root_label('f', beta)], rep.root_f(k));
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write cache file " + path);
  out << j.dump() << "\n";
}

IrrepRealization load_realization(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("cache file " + path + " is not valid JSON: " + ex.what());
  }
  try {
    if (j.at("version").get<int>() != kCacheVersion) throw Error("cache file " + path + " has an unsupported version");
    IrrepRealization rep;
    rep.rs_ = root_system(j.at("type").get<std::string>());
    std::vector<Rational> coords;
    for (const auto& c : j.at("weight")) coords.push_back(parse_rational(c.get<std::string>()));
    rep.pi_ = Weight(coords);
    rep.nodes_ = rep.pi_.support();
    const int n = j.at("dim").get<int>();
    for (const auto& w : j.at("basis_weights")) {
      std::vector<Rational> wc;
      for (const auto& c : w) wc.push_back(parse_rational(c.get<std::string>()));
      rep.weights_.emplace_back(std::move(wc));
    }
    for (const auto& g : j.at("grades")) rep.grades_.push_back(parse_rational(g.get<std::string>()));
    rep.levels_ = j.at("osculation_levels").get<std::vector<int>>();
    rep.lowering_roots_ = j.at("lowering_roots").get<std::vector<int>>();
    rep.u_grades_ = j.at("lowering_grades").get<std::vector<int>>();
    if (static_cast<int>(rep.weights_.size()) != n || static_cast<int>(rep.grades_.size()) != n ||
        static_cast<int>(rep.levels_.size()) != n || rep.u_grades_.size() != rep.lowering_roots_.size() ||
        j.at("m").get<int>() != rep.m())
      throw Error("cache file " + path + " has inconsistent sizes");
    for (int k : rep.lowering_roots_)
      if (k < 0 || k >= rep.rs_.num_positive_roots()) throw Error("cache file " + path + " has a bad root index");
    for (const auto& [label, m] : j.at("matrices").items()) rep.add_matrix(label, read_matrix(m, n));
    rep.index_labels();
    return rep;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("cache file " + path + " is malformed: " + ex.what());
  } catch (const std::out_of_range&) {
    throw Error("cache file " + path + " is missing generator matrices");
  }
}

}  // namespace lierigid
