#include "tmcg/surface_map.hpp"

#include <numeric>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace f = tmcg::free;

  f::Word loop_word(int l, int n) {
    if (l < n - 1) {
      return {f::gen(l)};
    }
    f::Word w;
    for (int k = 0; k < n - 1; ++k) {
      w.push_back(f::gen(k, -1));
    }
    return w;
  }

  f::Word expand_word(f::Word const& w, int n, int j) {
    if (j == n - 1) {
      return w;
    }
    std::vector<f::Word> images(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k) {
      if (k < j) {
        images[static_cast<std::size_t>(k)] = {f::gen(k)};
      } else if (k == j) {
        images[static_cast<std::size_t>(k)] = {f::gen(j + 1), f::gen(j)};
      } else {
        images[static_cast<std::size_t>(k)] = {f::gen(k + 1)};
      }
    }
    return f::substitute(w, images);
  }

  namespace {
    // Preimage under expand_word(., n'-1, j) of a word of a level-n' support,
    // or false when w is not in the image.
    bool contract_word(f::Word const& w, int np, int j, f::Word& out) {
      if (j + 1 == np - 1) {
        if (f::contains_generator(w, j)) {
          return false;
        }
        out = w;
        return true;
      }
      // Free basis change z_{j+1} = u z_j^-1, with u stored at index j+1.
      std::vector<f::Word> images(static_cast<std::size_t>(np - 1));
      for (int k = 0; k < np - 1; ++k) {
        images[static_cast<std::size_t>(k)] = {f::gen(k)};
      }
      images[static_cast<std::size_t>(j + 1)] = {f::gen(j + 1), f::gen(j, -1)};
      f::Word v = f::substitute(w, images);
      if (f::contains_generator(v, j)) {
        return false;
      }
      out.clear();
      for (auto l : v) {
        int const k = f::index_of(l);
        int const s = l > 0 ? 1 : -1;
        out.push_back(f::gen(k == j + 1 ? j : (k > j + 1 ? k - 1 : k), s));
      }
      return true;
    }

    void check_shape(SurfaceMap const& m) {
      std::size_t const n = m.source.level();
      if (m.target.level() != n || m.perm.size() != n || m.arcs.size() != n) {
        throw DimensionError("surface map trees, permutation and arcs differ in size");
      }
      std::vector<int> seen(n, 0);
      for (int v : m.perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
          throw DomainError("surface map permutation is not a bijection");
        }
      }
      if (!m.arcs[0].empty()) {
        throw DomainError("the arc of hole 0 must be trivial");
      }
      for (auto const& a : m.arcs) {
        for (auto l : a) {
          if (f::index_of(l) >= static_cast<int>(n) - 1) {
            throw DomainError("arc word uses an eliminated generator");
          }
        }
        if (f::reduced(a) != a) {
          throw DomainError("arc words must be freely reduced");
        }
      }
    }
  }  // namespace

  SurfaceMap::SurfaceMap() : perm{0, 1, 2}, arcs(3) {}

  SurfaceMap::SurfaceMap(Tree tgt, Tree src, std::vector<int> p, std::vector<f::Word> a)
      : target(std::move(tgt)), source(std::move(src)), perm(std::move(p)), arcs(std::move(a)) {
    check_shape(*this);
    if (!is_consistent()) {
      throw DomainError("arcs do not define a homeomorphism");
    }
  }

  SurfaceMap SurfaceMap::identity(Tree const& t) {
    SurfaceMap m;
    m.target = m.source = t;
    m.perm.resize(t.level());
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.arcs.assign(t.level(), {});
    return m;
  }

  SurfaceMap SurfaceMap::rigid(Symbol const& s) {
    if (!classify_symbol(s).in_T) {
      throw DomainError("rigid lifts exist only for elements of T");
    }
    SurfaceMap m;
    m.target = s.target;
    m.source = s.source;
    m.perm   = s.bij;
    m.arcs.assign(s.level(), {});
    return m;
  }

  f::Word SurfaceMap::image_of_loop(int l) const {
    int const   n = static_cast<int>(level());
    auto const& a = arcs[static_cast<std::size_t>(l)];
    return f::multiply(a, loop_word(perm[static_cast<std::size_t>(l)], n), f::inverse(a));
  }

  f::Word SurfaceMap::apply(f::Word const& w) const {
    int const            n = static_cast<int>(level());
    std::vector<f::Word> images(static_cast<std::size_t>(n - 1));
    for (int l = 0; l < n - 1; ++l) {
      images[static_cast<std::size_t>(l)] = image_of_loop(l);
    }
    return f::substitute(w, images);
  }

  bool SurfaceMap::is_consistent() const {
    int const n = static_cast<int>(level());
    f::Word   prod;
    for (int l = n - 1; l >= 0; --l) {
      prod = f::multiply(prod, image_of_loop(l));
    }
    return prod.empty();
  }

  SurfaceMap SurfaceMap::expand_source_at(std::size_t i) const {
    int const  n = static_cast<int>(level());
    int const  j = perm.at(i);
    SurfaceMap r;
    r.source = source.expand_at(i);
    r.target = target.expand_at(static_cast<std::size_t>(j));
    r.perm.clear();
    r.arcs.clear();
    for (std::size_t k = 0; k < perm.size(); ++k) {
      f::Word a = expand_word(arcs[k], n, j);
      if (k == i) {
        r.perm.push_back(j);
        r.perm.push_back(j + 1);
        r.arcs.push_back(a);
        r.arcs.push_back(std::move(a));
      } else {
        r.perm.push_back(perm[k] < j ? perm[k] : perm[k] + 1);
        r.arcs.push_back(std::move(a));
      }
    }
    return r;
  }

  SurfaceMap SurfaceMap::expand_target_at(std::size_t j) const {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] == static_cast<int>(j)) {
        return expand_source_at(i);
      }
    }
    throw AddressError("target index out of range");
  }

  SurfaceMap SurfaceMap::with_source(Tree const& t) const {
    if (!source.is_subtree_of(t)) {
      throw AddressError("cannot refine " + source.to_string() + " to " + t.to_string());
    }
    SurfaceMap  r = *this;
    std::size_t i = 0;
    while (i < r.source.level()) {
      if (t.has_leaf(r.source.leaf(i))) {
        ++i;
      } else {
        r = r.expand_source_at(i);
      }
    }
    return r;
  }

  SurfaceMap SurfaceMap::with_target(Tree const& t) const {
    if (!target.is_subtree_of(t)) {
      throw AddressError("cannot refine " + target.to_string() + " to " + t.to_string());
    }
    SurfaceMap  r = *this;
    std::size_t j = 0;
    while (j < r.target.level()) {
      if (t.has_leaf(r.target.leaf(j))) {
        ++j;
      } else {
        r = r.expand_target_at(j);
      }
    }
    return r;
  }

  std::string SurfaceMap::to_string() const {
    std::string s = "tgt=" + target.to_string() + " src=" + source.to_string() + " perm=[";
    for (std::size_t k = 0; k < perm.size(); ++k) {
      s += (k ? "," : "") + std::to_string(perm[k] + 1);
    }
    s += "] arcs=[";
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      s += (k ? "; " : "") + f::to_string(arcs[k], "z");
    }
    return s + "]";
  }

  SurfaceMap compose_maps(SurfaceMap const& a, SurfaceMap const& b) {
    SurfaceMap aa = a, bb = b;
    if (b.target != a.source) {
      Tree const mid = b.target.merge(a.source);
      bb             = b.with_target(mid);
      aa             = a.with_source(mid);
    }
    SurfaceMap c;
    c.target = aa.target;
    c.source = bb.source;
    c.perm.resize(bb.perm.size());
    c.arcs.resize(bb.arcs.size());
    auto const     h   = static_cast<std::size_t>(bb.perm[0]);
    f::Word const  hub = f::inverse(aa.arcs[h]);
    for (std::size_t i = 0; i < bb.perm.size(); ++i) {
      auto const q = static_cast<std::size_t>(bb.perm[i]);
      c.perm[i]    = aa.perm[q];
      c.arcs[i]    = f::multiply(hub, aa.apply(bb.arcs[i]), aa.arcs[q]);
    }
    return c;
  }

  SurfaceMap reduce_map(SurfaceMap m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < m.level(); ++i) {
        int const j = m.perm[i];
        if (m.perm[i + 1] != j + 1 || m.arcs[i] != m.arcs[i + 1] || !m.source.is_caret(i)
            || !m.target.is_caret(static_cast<std::size_t>(j))) {
          continue;
        }
        int const            np = static_cast<int>(m.level());
        std::vector<f::Word> pre(m.level());
        bool                 ok = true;
        for (std::size_t k = 0; k < m.level() && ok; ++k) {
          ok = contract_word(m.arcs[k], np, j, pre[k]);
        }
        if (!ok) {
          continue;
        }
        pre.erase(pre.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        m.arcs = std::move(pre);
        m.perm.erase(m.perm.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        for (auto& v : m.perm) {
          if (v > j) {
            --v;
          }
        }
        m.source = m.source.contract(i);
        m.target = m.target.contract(static_cast<std::size_t>(j));
        changed  = true;
        break;
      }
    }
    return m;
  }

  bool equal_maps(SurfaceMap const& a, SurfaceMap const& b) {
    if (a.source == b.source) {
      return a == b;
    }
    Tree const mid = a.source.merge(b.source);
    return a.with_source(mid) == b.with_source(mid);
  }

  Symbol symbol_of(SurfaceMap const& m) {
    return Symbol(m.target, m.source, m.perm);
  }

  namespace {
    struct Frame {
      int n, o, k;
      int pos(int l) const {
        return ((l - o - 1) % n + n) % n;
      }
      int lab(int p) const {
        return (o + 1 + p) % n;
      }
    };
  }  // namespace

  PositionalMap to_positional(SurfaceMap const& m) {
    if (m.source != m.target) {
      throw DomainError("positional form needs equal source and target");
    }
    int const n = static_cast<int>(m.level());
    Frame const fr{n, static_cast<int>(m.target.outer_leaf_index()), n - 1};
    if (m.perm[static_cast<std::size_t>(fr.o)] != fr.o) {
      throw DomainError("positional form needs the outer hole fixed");
    }
    std::vector<f::Word> to_y(static_cast<std::size_t>(n - 1));
    for (int l = 0; l < n - 1; ++l) {
      if (l == fr.o) {
        f::Word w;
        for (int p = 0; p < fr.k; ++p) {
          w.push_back(f::gen(p, -1));
        }
        to_y[static_cast<std::size_t>(l)] = w;
      } else {
        to_y[static_cast<std::size_t>(l)] = {f::gen(fr.pos(l))};
      }
    }
    f::Word const  go_inv = f::inverse(m.arcs[static_cast<std::size_t>(fr.o)]);
    PositionalMap pm;
    pm.holes = fr.k;
    for (int p = 0; p < fr.k; ++p) {
      auto const l = static_cast<std::size_t>(fr.lab(p));
      pm.perm.push_back(fr.pos(m.perm[l]));
      pm.arcs.push_back(f::substitute(f::multiply(go_inv, m.arcs[l]), to_y));
    }
    return pm;
  }

  SurfaceMap from_positional(Tree const& y, PositionalMap const& pm) {
    int const   n = static_cast<int>(y.level());
    Frame const fr{n, static_cast<int>(y.outer_leaf_index()), n - 1};
    if (pm.holes != fr.k) {
      throw DimensionError("positional map has the wrong number of holes");
    }
    std::vector<f::Word> to_z(static_cast<std::size_t>(fr.k));
    for (int p = 0; p < fr.k; ++p) {
      to_z[static_cast<std::size_t>(p)] = loop_word(fr.lab(p), n);
    }
    std::vector<f::Word> big_p(static_cast<std::size_t>(n));
    SurfaceMap           m = SurfaceMap::identity(y);
    for (int p = 0; p < fr.k; ++p) {
      auto const l = static_cast<std::size_t>(fr.lab(p));
      big_p[l]     = f::substitute(pm.arcs[static_cast<std::size_t>(p)], to_z);
      m.perm[l]    = fr.lab(pm.perm[static_cast<std::size_t>(p)]);
    }
    f::Word const p0_inv = f::inverse(big_p[0]);
    for (std::size_t l = 0; l < m.level(); ++l) {
      m.arcs[l] = f::multiply(p0_inv, big_p[l]);
    }
    return m;
  }

  SurfaceMap braid_map(Tree const& y, FramedBraidWord const& w) {
    if (w.strands() + 1 != static_cast<int>(y.level())) {
      throw DimensionError("braid strand count must be the support level minus one");
    }
    return from_positional(y, PositionalMap::of_word(w));
  }

  std::string MapNormalForm::to_string() const {
    return "T=[" + t_part.to_string() + "] support=" + support.to_string()
           + " outer=" + outer.to_string() + " braid=" + braid.to_string();
  }

  MapNormalForm normal_form(SurfaceMap const& m, long budget) {
    SurfaceMap const r = reduce_map(m);
    int const        n = static_cast<int>(r.level());
    int const        o = static_cast<int>(r.target.outer_leaf_index());
    int              src = 0;
    while (r.perm[static_cast<std::size_t>(src)] != o) {
      ++src;
    }
    int const        c = ((o - src) % n + n) % n;
    std::vector<int> bij(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      bij[static_cast<std::size_t>(i)]           = (i + c) % n;
      inv[static_cast<std::size_t>((i + c) % n)] = i;
    }
    Symbol const tau(r.target, r.source, bij);
    SurfaceMap const back = SurfaceMap::rigid(Symbol(r.source, r.target, inv));
    SurfaceMap const kern = compose_maps(r, back);
    MapNormalForm    nf{VElement(tau), r.target, r.target.leaf(static_cast<std::size_t>(o)),
                     braid_word_of(to_positional(kern), budget)};
    return nf;
  }

  SurfaceMap from_normal_form(MapNormalForm const& nf) {
    Symbol const& s = nf.t_part.symbol();
    SurfaceMap    b = braid_map(nf.support, nf.braid);
    return compose_maps(b, SurfaceMap::rigid(s));
  }

  SurfaceMap invert_map(SurfaceMap const& m, long budget) {
    MapNormalForm nf = normal_form(m, budget);
    Symbol const& s  = nf.t_part.symbol();
    std::vector<int> inv(s.level());
    for (std::size_t i = 0; i < s.level(); ++i) {
      inv[static_cast<std::size_t>(s.bij[i])] = static_cast<int>(i);
    }
    SurfaceMap const back = SurfaceMap::rigid(Symbol(s.source, s.target, inv));
    return compose_maps(back, braid_map(nf.support, nf.braid.inverse()));
  }

}  // namespace tmcg
