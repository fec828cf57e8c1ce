#ifndef SOLGROWTH_TABLE_HPP_
#define SOLGROWTH_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"

namespace solgrowth {

  using Index = std::uint32_t;

  /// Default enumeration cap (elements).
  inline constexpr std::size_t kDefaultCap = 2'000'000;

  /// Tables up to this order carry a dense product table; larger ones
  /// multiply by walking the BFS word of the right factor.
  inline constexpr std::size_t kDenseThreshold = 4096;

  /// One letter of the alphabet X u X^-1: generator number and orientation.
  struct Symbol {
    std::size_t generator = 0;
    bool        inverse   = false;
  };

  /// A fully enumerated finite group with exact word lengths. Element 0 is
  /// the identity and indices follow BFS order over the alphabet (generators
  /// in the given order, then inverses), so index order is the canonical
  /// tie-break everywhere downstream.
  class FiniteGroupTable {
   public:
    FiniteGroupTable() = default;
    FiniteGroupTable(FiniteGroupTable&&) = default;
    FiniteGroupTable& operator=(FiniteGroupTable&&) = default;

    // The lookup map views into _encodings, so copies rebuild it.
    FiniteGroupTable(FiniteGroupTable const& that)
        : _genset(that._genset),
          _symbols(that._symbols),
          _generators(that._generators),
          _right(that._right),
          _parent(that._parent),
          _parent_symbol(that._parent_symbol),
          _word_length(that._word_length),
          _inverse(that._inverse),
          _dense(that._dense),
          _word_offset(that._word_offset),
          _word_symbols(that._word_symbols),
          _encodings(that._encodings) {
      for (std::size_t i = 0; i < _encodings.size(); ++i) {
        _lookup.emplace(std::string_view(_encodings[i]), static_cast<Index>(i));
      }
    }

    FiniteGroupTable& operator=(FiniteGroupTable const& that) {
      if (this != &that) {
        FiniteGroupTable tmp(that);
        *this = std::move(tmp);
      }
      return *this;
    }

    std::size_t order() const {
      return _word_length.size();
    }

    std::size_t num_symbols() const {
      return _symbols.size();
    }

    std::vector<Symbol> const& symbols() const {
      return _symbols;
    }

    /// Indices of the elements of X (in generating-set order).
    std::vector<Index> const& generators() const {
      return _generators;
    }

    Index identity() const {
      return 0;
    }

    Index right_mul_symbol(Index a, std::size_t s) const {
      return _right[static_cast<std::size_t>(a) * _symbols.size() + s];
    }

    Index mul(Index a, Index b) const {
      if (!_dense.empty()) {
        return _dense[static_cast<std::size_t>(a) * order() + b];
      }
      auto const S = _symbols.size();
      for (auto k = _word_offset[b]; k < _word_offset[b + 1]; ++k) {
        a = _right[static_cast<std::size_t>(a) * S + _word_symbols[k]];
      }
      return a;
    }

    Index inv(Index a) const {
      return _inverse[a];
    }

    /// x^g = g^-1 x g.
    Index conj(Index x, Index g) const {
      return mul(mul(inv(g), x), g);
    }

    /// [a, b] = a^-1 b^-1 a b.
    Index comm(Index a, Index b) const {
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }

    std::uint32_t word_length(Index a) const {
      return _word_length[a];
    }

    std::vector<std::uint32_t> const& word_lengths() const {
      return _word_length;
    }

    std::uint32_t diameter() const {
      return _word_length.empty() ? 0 : _word_length.back();
    }

    /// A shortest word for a: symbol indices, leftmost letter first.
    std::vector<std::size_t> symbol_word(Index a) const {
      std::vector<std::size_t> w;
      while (a != 0) {
        w.push_back(_parent_symbol[a]);
        a = _parent[a];
      }
      return {w.rbegin(), w.rend()};
    }

    /// A shortest word for a as signed 1-based generator numbers: k means
    /// x_k and -k means x_k^-1.
    std::vector<int> word(Index a) const {
      std::vector<int> out;
      for (auto s : symbol_word(a)) {
        auto g = static_cast<int>(_symbols[s].generator) + 1;
        out.push_back(_symbols[s].inverse ? -g : g);
      }
      return out;
    }

    /// Cumulative ball sizes gamma(0), ..., gamma(diameter).
    std::vector<std::uint64_t> growth() const {
      std::vector<std::uint64_t> g(diameter() + 1, 0);
      for (auto len : _word_length) {
        ++g[len];
      }
      for (std::size_t r = 1; r < g.size(); ++r) {
        g[r] += g[r - 1];
      }
      return g;
    }

    Index element_order(Index a) const {
      Index         x = a;
      std::uint32_t k = 1;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      return k;
    }

    /// False for abstract tables such as quotients, which only carry the
    /// Cayley graph.
    bool has_elements() const {
      return !_encodings.empty();
    }

    GenSet const& generating_set() const {
      return _genset;
    }

    std::string const& encoding(Index a) const {
      return _encodings[a];
    }

    GroupElement element(Index a) const {
      if (!has_elements()) {
        fail(ErrorKind::InvalidElement, "abstract table has no concrete elements");
      }
      return GroupElement::decode(_encodings[a]);
    }

    std::optional<Index> find(GroupElement const& g) const {
      auto code = g.encode();
      auto it   = _lookup.find(std::string_view(code));
      if (it == _lookup.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Index index_of(GroupElement const& g) const {
      auto i = find(g);
      if (!i) {
        fail(ErrorKind::InvalidElement, "element is not in the table");
      }
      return *i;
    }

    bool dense() const {
      return !_dense.empty();
    }

    friend FiniteGroupTable enumerate_group(GenSet const& X, std::size_t cap);

    /// Builds a table by BFS over an abstract Cayley graph: nodes are
    /// caller-side ids, step(node, s) follows symbol s, invert(node) gives
    /// the inverse node. Returns the table and the map node -> index.
    static std::pair<FiniteGroupTable, std::vector<Index>>
    from_cayley_graph(std::size_t                                 num_nodes,
                      std::size_t                                 start,
                      std::vector<Symbol>                         symbols,
                      std::function<std::size_t(std::size_t, std::size_t)> step,
                      std::function<std::size_t(std::size_t)>     invert,
                      std::size_t num_generators) {
      FiniteGroupTable         T;
      T._symbols = std::move(symbols);
      auto const               S = T._symbols.size();
      constexpr Index          kNone = static_cast<Index>(-1);
      std::vector<Index>       index(num_nodes, kNone);
      std::vector<std::size_t> node_of;
      index[start] = 0;
      node_of.push_back(start);
      T._parent.push_back(0);
      T._parent_symbol.push_back(0);
      T._word_length.push_back(0);
      for (std::size_t head = 0; head < node_of.size(); ++head) {
        for (std::size_t s = 0; s < S; ++s) {
          auto next = step(node_of[head], s);
          if (index[next] == kNone) {
            index[next] = static_cast<Index>(node_of.size());
            node_of.push_back(next);
            T._parent.push_back(static_cast<Index>(head));
            T._parent_symbol.push_back(static_cast<std::uint8_t>(s));
            T._word_length.push_back(T._word_length[head] + 1);
          }
        }
      }
      auto const n = node_of.size();
      T._right.resize(n * S);
      T._inverse.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < S; ++s) {
          T._right[i * S + s] = index[step(node_of[i], s)];
        }
        T._inverse[i] = index[invert(node_of[i])];
      }
      for (std::size_t s = 0; s < S && T._generators.size() < num_generators;
           ++s) {
        if (!T._symbols[s].inverse) {
          T._generators.push_back(T._right[s]);
        }
      }
      T.finish();
      return {std::move(T), std::move(index)};
    }

   private:
    void finish() {
      auto const n = order();
      auto const S = _symbols.size();
      if (n <= kDenseThreshold) {
        _dense.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          auto* row = &_dense[i * n];
          row[0]    = static_cast<Index>(i);
          for (std::size_t j = 1; j < n; ++j) {
            row[j] = _right[static_cast<std::size_t>(row[_parent[j]]) * S
                            + _parent_symbol[j]];
          }
        }
      } else {
        _word_offset.assign(n + 1, 0);
        for (std::size_t j = 0; j < n; ++j) {
          _word_offset[j + 1] = _word_offset[j] + _word_length[j];
        }
        _word_symbols.assign(_word_offset[n], 0);
        for (std::size_t j = 1; j < n; ++j) {
          // parent's word followed by the last letter
          auto parent = _parent[j];
          std::copy(_word_symbols.begin() + _word_offset[parent],
                    _word_symbols.begin() + _word_offset[parent + 1],
                    _word_symbols.begin() + _word_offset[j]);
          _word_symbols[_word_offset[j + 1] - 1] = _parent_symbol[j];
        }
      }
    }

    GenSet                                      _genset;
    std::vector<Symbol>                         _symbols;
    std::vector<Index>                          _generators;
    std::vector<Index>                          _right;
    std::vector<Index>                          _parent;
    std::vector<std::uint8_t>                   _parent_symbol;
    std::vector<std::uint32_t>                  _word_length;
    std::vector<Index>                          _inverse;
    std::vector<Index>                          _dense;
    std::vector<std::size_t>                    _word_offset;
    std::vector<std::uint8_t>                   _word_symbols;
    std::deque<std::string>                     _encodings;
    std::unordered_map<std::string_view, Index> _lookup;
  };

  /// Alphabet for X: the generators in order, then each inverse that is not
  /// already a letter. Letters equal as elements are kept once.
  inline std::pair<std::vector<Symbol>, std::vector<GroupElement>>
  alphabet(GenSet const& X) {
    std::vector<Symbol>             symbols;
    std::vector<GroupElement>       letters;
    std::unordered_map<std::string, bool> seen;
    auto add = [&](GroupElement const& g, Symbol s) {
      if (seen.emplace(g.encode(), true).second) {
        symbols.push_back(s);
        letters.push_back(g);
      }
    };
    for (std::size_t k = 0; k < X.size(); ++k) {
      add(X.elements[k], Symbol{k, false});
    }
    if (X.symmetric) {
      for (std::size_t k = 0; k < X.size(); ++k) {
        add(X.elements[k].inverse(), Symbol{k, true});
      }
    }
    return {std::move(symbols), std::move(letters)};
  }

  /// Enumerates <X> by breadth-first search over X u X^-1, recording exact
  /// word lengths. Throws CapExceeded when more than `cap` elements appear.
  inline FiniteGroupTable enumerate_group(GenSet const& X,
                                          std::size_t   cap = kDefaultCap) {
    if (cap < 1) {
      fail(ErrorKind::CapExceeded, "cap must be positive");
    }
    X.validate();
    auto [symbols, letters] = alphabet(X);
    if (symbols.size() > 255) {
      fail(ErrorKind::InvalidElement, "too many generators (max 255 letters)");
    }
    FiniteGroupTable T;
    T._genset  = X;
    T._symbols = symbols;
    auto const S = symbols.size();

    auto add = [&](GroupElement const& g, Index parent, std::size_t s,
                   std::uint32_t len) -> Index {
      T._encodings.push_back(g.encode());
      auto idx = static_cast<Index>(T._encodings.size() - 1);
      T._lookup.emplace(std::string_view(T._encodings.back()), idx);
      T._parent.push_back(parent);
      T._parent_symbol.push_back(static_cast<std::uint8_t>(s));
      T._word_length.push_back(len);
      return idx;
    };

    std::deque<GroupElement> pending;
    pending.push_back(X.identity());
    add(pending.back(), 0, 0, 0);
    T._right.reserve(S * 64);
    for (std::size_t head = 0; head < T._encodings.size(); ++head) {
      GroupElement g = std::move(pending.front());
      pending.pop_front();
      for (std::size_t s = 0; s < S; ++s) {
        GroupElement h    = g * letters[s];
        auto         code = h.encode();
        auto         it   = T._lookup.find(std::string_view(code));
        Index        idx;
        if (it == T._lookup.end()) {
          if (T._encodings.size() >= cap) {
            fail(ErrorKind::CapExceeded,
                 "group has more than " + std::to_string(cap) + " elements");
          }
          idx = add(h, static_cast<Index>(head), s, T._word_length[head] + 1);
          pending.push_back(std::move(h));
        } else {
          idx = it->second;
        }
        T._right.push_back(idx);
      }
    }
    auto const n = T.order();
    T._inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      T._inverse[i] = T.index_of(GroupElement::decode(T._encodings[i]).inverse());
    }
    for (std::size_t k = 0; k < X.size(); ++k) {
      T._generators.push_back(T.index_of(X.elements[k]));
    }
    T.finish();
    return T;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_TABLE_HPP_
