#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "subset.hpp"

namespace sepcong {

  struct Triple {
    Element a;
    Element b;
    Element c;

    friend bool operator==(Triple, Triple) = default;
  };

  /// Raised when a table is not associative; witness() gives the first
  /// (a, b, c) in lexicographic order with (ab)c != a(bc).
  class AssociativityError : public Error {
   public:
    explicit AssociativityError(Triple w)
        : Error("associativity violation at (" + std::to_string(w.a) + ","
                + std::to_string(w.b) + "," + std::to_string(w.c) + ")"),
          _witness(w) {}

    Triple witness() const noexcept {
      return _witness;
    }

   private:
    Triple _witness;
  };

  /// First triple (a, b, c), lexicographically, with (ab)c != a(bc).
  /// Precondition: every cell is in [0, order).
  inline std::optional<Triple> find_associativity_violation(std::size_t            order,
                                                            std::span<Element const> cells) {
    auto at = [&](Element x, Element y) { return cells[x * order + y]; };
    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) {
        Element const ab = at(a, b);
        for (Element c = 0; c < order; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            return Triple{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_associative(std::size_t order, std::span<Element const> cells) {
    return !find_associativity_violation(order, cells).has_value();
  }

  inline bool is_commutative(std::size_t order, std::span<Element const> cells) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = a + 1; b < order; ++b) {
        if (cells[a * order + b] != cells[b * order + a]) {
          return false;
        }
      }
    }
    return true;
  }

  /// A finite semigroup given by its Cayley table. Row = left factor.
  /// Immutable after construction; closure and associativity are checked
  /// by the constructor.
  class Semigroup {
   public:
    Semigroup(std::size_t order, std::vector<Element> cells)
        : _order(order), _cells(std::move(cells)) {
      if (order == 0) {
        throw InvalidArgument("semigroup order must be positive");
      }
      if (order > kMaxOrder) {
        throw InvalidArgument("semigroup order " + std::to_string(order) + " exceeds "
                              + std::to_string(kMaxOrder));
      }
      if (_cells.size() != order * order) {
        throw InvalidArgument("Cayley table has " + std::to_string(_cells.size())
                              + " cells, expected " + std::to_string(order * order));
      }
      for (Element v : _cells) {
        if (v >= order) {
          throw InvalidArgument("table entry " + std::to_string(v) + " out of range");
        }
      }
      if (auto w = find_associativity_violation(order, _cells)) {
        throw AssociativityError(*w);
      }
      _commutative = sepcong::is_commutative(order, _cells);
    }

    std::size_t order() const noexcept {
      return _order;
    }

    Element operator()(Element a, Element b) const noexcept {
      return _cells[a * _order + b];
    }

    std::span<Element const> cells() const noexcept {
      return _cells;
    }

    std::span<Element const> row(Element a) const noexcept {
      return std::span<Element const>(_cells).subspan(a * _order, _order);
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }

    SubsetMask all() const {
      return SubsetMask::full(_order);
    }

    SubsetMask none() const {
      return SubsetMask::empty(_order);
    }

    friend bool operator==(Semigroup const& x, Semigroup const& y) {
      return x._order == y._order && x._cells == y._cells;
    }

   private:
    std::size_t          _order;
    std::vector<Element> _cells;
    bool                 _commutative = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Cayley text format
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    struct NumberedLine {
      std::size_t      number;
      std::string_view text;
    };

    inline std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\f\v";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    }

    /// Lines that carry content: not blank and not '#' comments.
    inline std::vector<NumberedLine> content_lines(std::string_view text) {
      std::vector<NumberedLine> out;
      std::size_t               number = 0;
      std::size_t               start  = 0;
      while (start <= text.size()) {
        auto pos  = text.find('\n', start);
        auto line = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
        ++number;
        auto t = trim(line);
        if (!t.empty() && t.front() != '#') {
          out.push_back({number, t});
        }
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return out;
    }

    inline std::vector<unsigned long long> parse_numbers(NumberedLine const& line) {
      std::vector<unsigned long long> out;
      std::string_view                s = line.text;
      while (true) {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos) {
          break;
        }
        s      = s.substr(b);
        auto e = s.find_first_of(" \t");
        auto tok = s.substr(0, e);
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          throw ParseError(line.number, "not a non-negative integer: '" + std::string(tok) + "'");
        }
        out.push_back(v);
        if (e == std::string_view::npos) {
          break;
        }
        s = s.substr(e);
      }
      return out;
    }

    /// Parses one table starting at lines[pos]; advances pos past it.
    inline Semigroup parse_table_at(std::vector<NumberedLine> const& lines, std::size_t& pos) {
      auto const& header = lines[pos];
      auto        head   = parse_numbers(header);
      if (head.size() != 1) {
        throw ParseError(header.number, "expected the order n alone on the line");
      }
      if (head[0] == 0 || head[0] > kMaxOrder) {
        throw ParseError(header.number, "order must be in [1, " + std::to_string(kMaxOrder) + "]");
      }
      std::size_t const    n = head[0];
      std::vector<Element> cells;
      cells.reserve(n * n);
      ++pos;
      for (std::size_t r = 0; r < n; ++r, ++pos) {
        if (pos >= lines.size()) {
          throw ParseError(lines.back().number,
                           "table ends after " + std::to_string(r) + " of " + std::to_string(n)
                               + " rows");
        }
        auto row = parse_numbers(lines[pos]);
        if (row.size() != n) {
          throw ParseError(lines[pos].number, "expected " + std::to_string(n) + " entries, got "
                                                  + std::to_string(row.size()));
        }
        for (auto v : row) {
          if (v >= n) {
            throw ParseError(lines[pos].number,
                             "entry " + std::to_string(v) + " out of range [0, "
                                 + std::to_string(n) + ")");
          }
          cells.push_back(static_cast<Element>(v));
        }
      }
      return Semigroup(n, std::move(cells));
    }

  }  // namespace detail

  /// Parses one table in the Cayley text format: line 1 is n, then n rows of
  /// n space-separated entries. Blank lines and '#' lines are ignored.
  /// Throws ParseError or AssociativityError.
  inline Semigroup parse_table(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) {
      throw ParseError(0, "no table found");
    }
    std::size_t pos = 0;
    Semigroup   s   = detail::parse_table_at(lines, pos);
    if (pos != lines.size()) {
      throw ParseError(lines[pos].number, "unexpected content after table");
    }
    return s;
  }

  /// Canonical text form: "n\n" then one line per row, single spaces.
  inline std::string format_table(Semigroup const& s) {
    std::string out = std::to_string(s.order()) + "\n";
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        if (b != 0) {
          out += ' ';
        }
        out += std::to_string(s(a, b));
      }
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named constructions
  ////////////////////////////////////////////////////////////////////////

  inline Semigroup make_named(std::string_view name, std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("make_named: order must be positive");
    }
    std::vector<Element> cells(n * n);
    std::function<Element(std::size_t, std::size_t)> op;
    if (name == "null") {
      op = [](std::size_t, std::size_t) { return Element{0}; };
    } else if (name == "chain_min") {
      op = [](std::size_t a, std::size_t b) { return static_cast<Element>(std::min(a, b)); };
    } else if (name == "zmod_mult") {
      op = [n](std::size_t a, std::size_t b) { return static_cast<Element>((a * b) % n); };
    } else if (name == "zmod_add") {
      op = [n](std::size_t a, std::size_t b) { return static_cast<Element>((a + b) % n); };
    } else {
      throw InvalidArgument("unknown named semigroup '" + std::string(name) + "'");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        cells[a * n + b] = op(a, b);
      }
    }
    return Semigroup(n, std::move(cells));
  }

}  // namespace sepcong
