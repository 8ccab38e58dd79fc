#include "tmcg/bv.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace {
    LeafAddress const kRoot{3, ""};

    std::vector<int> identity_perm(std::size_t n) {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }
  }  // namespace

  RootedTree RootedTree::from_tree(Tree t) {
    if (!t.has_leaf(kRoot)) {
      throw DomainError("rooted trees never expand the root edge");
    }
    return RootedTree(std::move(t));
  }

  RootedTree RootedTree::parse(std::string_view text) {
    std::string s(text);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
      throw ParseError("rooted tree must be a caret", 0);
    }
    s.insert(s.size() - 1, ",");
    return from_tree(Tree::parse(s));
  }

  RootedTree RootedTree::expand_at(std::size_t i) const {
    if (i >= leaves()) {
      throw AddressError("rooted leaf index out of range");
    }
    return RootedTree(_t.expand_at(i));
  }

  bool RootedTree::is_caret(std::size_t i) const {
    return i + 1 < leaves() && _t.is_caret(i);
  }

  RootedTree RootedTree::contract(std::size_t i) const {
    if (!is_caret(i) || leaves() < 3) {
      throw DomainError("no contractible caret at this leaf");
    }
    return RootedTree(_t.contract(i));
  }

  RootedTree RootedTree::merge(RootedTree const& o) const {
    return RootedTree(_t.merge(o._t));
  }

  bool RootedTree::is_subtree_of(RootedTree const& o) const {
    return _t.is_subtree_of(o._t);
  }

  std::string RootedTree::to_string() const {
    std::string s = _t.to_string();
    s.erase(s.size() - 2, 1);  // the empty root branch
    return s;
  }

  BVElement::BVElement(RootedTree tgt, RootedTree src, BraidWord w)
      : target(std::move(tgt)), source(std::move(src)), braid(std::move(w)) {
    if (target.leaves() != source.leaves()
        || static_cast<std::size_t>(braid.strands()) != source.leaves()) {
      throw DimensionError("braided pair needs equal leaf and strand counts");
    }
    if (braid.has_framing()) {
      throw DomainError("braided pairs carry unframed braids");
    }
  }

  BVElement BVElement::expand_source_at(std::size_t i) const {
    auto const p = perm_of(braid);
    return {target.expand_at(static_cast<std::size_t>(p.at(i))),
            source.expand_at(i),
            cable(braid, static_cast<int>(i) + 1)};
  }

  BVElement BVElement::with_source(RootedTree const& t) const {
    if (!source.is_subtree_of(t)) {
      throw DomainError("with_source needs an expansion of the source");
    }
    BVElement x = *this;
    for (std::size_t i = 0; i < x.leaves();) {
      if (t.tree().has_leaf(x.source.tree().leaf(i))) {
        ++i;
      } else {
        x = x.expand_source_at(i);
      }
    }
    return x;
  }

  BVElement BVElement::with_target(RootedTree const& t) const {
    if (!target.is_subtree_of(t)) {
      throw DomainError("with_target needs an expansion of the target");
    }
    BVElement x = *this;
    for (std::size_t j = 0; j < x.leaves();) {
      if (t.tree().has_leaf(x.target.tree().leaf(j))) {
        ++j;
        continue;
      }
      auto const p = perm_of(x.braid);
      auto const i = std::find(p.begin(), p.end(), static_cast<int>(j)) - p.begin();
      x = x.expand_source_at(static_cast<std::size_t>(i));
    }
    return x;
  }

  std::string BVElement::to_string() const {
    return "tgt=" + target.to_string() + " src=" + source.to_string()
           + " braid=" + braid.to_string();
  }

  BVElement bv_reduce(BVElement x) {
    bool changed = true;
    while (changed && x.leaves() > 2) {
      changed = false;
      auto const p = perm_of(x.braid);
      for (std::size_t i = 0; i + 1 < x.leaves(); ++i) {
        auto const j = static_cast<std::size_t>(p[i]);
        if (!x.source.is_caret(i) || p[i + 1] != p[i] + 1 || !x.target.is_caret(j)) {
          continue;
        }
        int const  k    = static_cast<int>(i) + 1;
        BraidWord  rest = delete_strand(x.braid, k + 1);
        if (!equal_braids(x.braid, cable(rest, k))) {
          continue;
        }
        x       = BVElement(x.target.contract(j), x.source.contract(i), rest);
        changed = true;
        break;
      }
    }
    return x;
  }

  BVElement bv_multiply(BVElement const& a, BVElement const& b) {
    RootedTree const mid = a.source.merge(b.target);
    BVElement const  x   = a.with_source(mid);
    BVElement const  y   = b.with_target(mid);
    return bv_reduce(BVElement(x.target, y.source, compose_framed(y.braid, x.braid)));
  }

  BVElement bv_invert(BVElement const& a) {
    return {a.source, a.target, a.braid.inverse()};
  }

  BVElement bv_power(BVElement const& a, int e) {
    BVElement const base = e < 0 ? bv_invert(a) : a;
    BVElement       acc;
    for (int i = 0; i < std::abs(e); ++i) {
      acc = bv_multiply(acc, base);
    }
    return acc;
  }

  bool bv_equal(BVElement const& a, BVElement const& b) {
    RootedTree const src = a.source.merge(b.source);
    BVElement const  x   = a.with_source(src);
    BVElement const  y   = b.with_source(src);
    return x.target == y.target && equal_braids(x.braid, y.braid);
  }

  bool bv_is_identity(BVElement const& a) {
    return bv_equal(a, BVElement());
  }

  BVElement iota_embed(BraidWord const& w, RootedTree const& support) {
    if (static_cast<std::size_t>(w.strands()) != support.leaves()) {
      throw DimensionError("support level must exceed the strand count by one");
    }
    return bv_reduce(BVElement(support, support, w));
  }

  BVGenerators const& bv_generators() {
    static BVGenerators const g = [] {
      BVGenerators r;
      auto const   sc = RootedTree::parse("(,(,))");
      r.A   = BVElement(RootedTree::parse("((,),)"), sc, BraidWord(3));
      r.B   = BVElement(RootedTree::parse("(,((,),))"), RootedTree::parse("(,(,(,)))"),
                        BraidWord(4));
      r.C   = BVElement(sc, sc, BraidWord::parse("n=3: s1 s2"));
      r.pi0 = BVElement(sc, sc, BraidWord::parse("n=3: s1"));
      return r;
    }();
    return g;
  }

  BVElement bv_parse(std::string_view text) {
    BWord const w = parse_word(text, "ABCP", false);
    auto const& g = bv_generators();
    BVElement const* gens[4] = {&g.A, &g.B, &g.C, &g.pi0};
    BVElement acc;
    for (auto l : w.letters) {
      BVElement const& x = *gens[static_cast<std::size_t>(free::index_of(l))];
      acc                = bv_multiply(acc, l > 0 ? x : bv_invert(x));
    }
    return acc;
  }

  VElement project_v(BVElement const& x) {
    auto bij = perm_of(x.braid);
    bij.push_back(static_cast<int>(x.leaves()));
    return reduce(Symbol(x.target.tree(), x.source.tree(), std::move(bij)));
  }

  BElement embed_bv(BVElement const& x) {
    auto const r = SurfaceMap::rigid(
        Symbol(x.target.tree(), x.source.tree(), identity_perm(x.target.tree().level())));
    return BElement(reduce_map(compose_maps(r, braid_map(x.source.tree(), x.braid))));
  }

  namespace {
    std::vector<RootedTree> rooted_trees(std::size_t leaves) {
      std::set<std::string>   seen;
      std::vector<RootedTree> layer{RootedTree()};
      for (std::size_t n = 2; n < leaves; ++n) {
        std::vector<RootedTree> next;
        for (auto const& t : layer) {
          for (std::size_t i = 0; i < t.leaves(); ++i) {
            RootedTree u = t.expand_at(i);
            if (seen.insert(u.to_string()).second) {
              next.push_back(std::move(u));
            }
          }
        }
        layer = std::move(next);
      }
      return layer;
    }
  }  // namespace

  IotaWitness iota_witness(BVElement const& x, std::size_t level) {
    if (level < 3) {
      return {};
    }
    std::size_t const n = level - 1;
    for (auto const& t : rooted_trees(n)) {
      for (int j = 1; j < static_cast<int>(n); ++j) {
        BraidWord w(static_cast<int>(n), {BraidLetter::sigma(j)});
        if (bv_equal(x, BVElement(t, t, w))) {
          return {t, j};
        }
      }
    }
    return {};
  }

}  // namespace tmcg
