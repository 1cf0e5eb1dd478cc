#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "semigroup.hpp"

namespace sepcong {

  /// Default exhaustive caps; raise them explicitly for larger orders.
  inline constexpr std::size_t kDefaultCommutativeCap = 4;
  inline constexpr std::size_t kDefaultGeneralCap     = 3;
  inline constexpr std::size_t kCanonicalizeCap       = 6;

  namespace detail {

    inline constexpr Element kUnset = ~Element{0};

    /// Backtracking over Cayley tables. Cells are filled in a fixed order
    /// (the upper triangle row by row in commutative mode, every cell row by
    /// row otherwise); after each assignment every triple whose four
    /// products are already defined must associate.
    class TableSearch {
     public:
      TableSearch(std::size_t n, bool commutative) : _n(n), _commutative(commutative) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = commutative ? i : 0; j < n; ++j) {
            _order.emplace_back(i, j);
          }
        }
        _cells.assign(n * n, kUnset);
      }

      std::size_t num_cells() const noexcept {
        return _order.size();
      }

      /// Visits complete associative tables in lexicographic fill order.
      /// The first cell is fixed to first_value when given.
      template <typename F>
      void run(F&& emit, std::optional<Element> first_value = std::nullopt) {
        if (first_value) {
          if (assign(0, *first_value)) {
            search(1, emit);
          }
          clear(0);
        } else {
          search(0, emit);
        }
      }

      /// Random value order per cell; stops after the first complete table.
      template <typename Rng>
      std::optional<std::vector<Element>> sample(Rng& rng) {
        std::optional<std::vector<Element>> found;
        random_search(0, rng, found);
        std::fill(_cells.begin(), _cells.end(), kUnset);
        return found;
      }

     private:
      bool assign(std::size_t k, Element v) {
        auto [i, j]          = _order[k];
        _cells[i * _n + j]   = v;
        _cells[j * _n + i]   = _commutative ? v : _cells[j * _n + i];
        return consistent();
      }

      void clear(std::size_t k) {
        auto [i, j]        = _order[k];
        _cells[i * _n + j] = kUnset;
        if (_commutative) {
          _cells[j * _n + i] = kUnset;
        }
      }

      bool consistent() const {
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            Element ab = _cells[a * _n + b];
            if (ab == kUnset) {
              continue;
            }
            for (std::size_t c = 0; c < _n; ++c) {
              Element bc = _cells[b * _n + c];
              if (bc == kUnset) {
                continue;
              }
              Element lhs = _cells[ab * _n + c];
              Element rhs = _cells[a * _n + bc];
              if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename F>
      void search(std::size_t k, F& emit) {
        if (k == _order.size()) {
          emit(std::vector<Element>(_cells));
          return;
        }
        for (Element v = 0; v < _n; ++v) {
          if (assign(k, v)) {
            search(k + 1, emit);
          }
        }
        clear(k);
      }

      template <typename Rng>
      void random_search(std::size_t k, Rng& rng, std::optional<std::vector<Element>>& found) {
        if (k == _order.size()) {
          found = _cells;
          return;
        }
        std::vector<Element> values(_n);
        std::iota(values.begin(), values.end(), Element{0});
        std::shuffle(values.begin(), values.end(), rng);
        for (Element v : values) {
          if (assign(k, v)) {
            random_search(k + 1, rng, found);
            if (found) {
              return;
            }
          }
        }
        clear(k);
      }

      std::size_t                                    _n;
      bool                                           _commutative;
      std::vector<std::pair<std::size_t, std::size_t>> _order;
      std::vector<Element>                           _cells;
    };

    inline std::vector<Semigroup> enumerate_tables(std::size_t n, bool commutative, unsigned jobs) {
      // One bucket per value of the first cell, concatenated in value order.
      std::vector<std::vector<Semigroup>> buckets(n);
      auto work = [&](Element first) {
        TableSearch search(n, commutative);
        search.run([&](std::vector<Element> cells) { buckets[first].emplace_back(n, std::move(cells)); },
                   first);
      };
      jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
      if (jobs == 1) {
        for (Element v = 0; v < n; ++v) {
          work(v);
        }
      } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) {
          pool.emplace_back([&, w] {
            for (Element v = w; v < n; v += jobs) {
              work(v);
            }
          });
        }
      }
      std::vector<Semigroup> out;
      for (auto& b : buckets) {
        std::move(b.begin(), b.end(), std::back_inserter(out));
      }
      return out;
    }

    inline std::vector<Element> relabel(Semigroup const& s, std::span<Element const> perm) {
      std::size_t const    n = s.order();
      std::vector<Element> out(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          out[perm[a] * n + perm[b]] = perm[s(a, b)];
        }
      }
      return out;
    }

    template <typename F>
    void for_each_relabeling(Semigroup const& s, F&& f) {
      if (s.order() > kCanonicalizeCap) {
        throw CapExceeded("relabeling", s.order(), kCanonicalizeCap);
      }
      std::vector<Element> perm(s.order());
      std::iota(perm.begin(), perm.end(), Element{0});
      do {
        f(relabel(s, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

  }  // namespace detail

  /// The lexicographically smallest row-major table over all relabelings.
  inline Semigroup canonicalize(Semigroup const& s) {
    std::vector<Element> best(s.cells().begin(), s.cells().end());
    detail::for_each_relabeling(s, [&](std::vector<Element> cells) {
      if (cells < best) {
        best = std::move(cells);
      }
    });
    return Semigroup(s.order(), std::move(best));
  }

  /// Number of distinct tables obtained by relabeling s.
  inline std::size_t orbit_size(Semigroup const& s) {
    std::set<std::vector<Element>> seen;
    detail::for_each_relabeling(s, [&](std::vector<Element> cells) { seen.insert(std::move(cells)); });
    return seen.size();
  }

  inline bool is_canonical(Semigroup const& s) {
    return s.order() <= kCanonicalizeCap && canonicalize(s) == s;
  }

  /// Every labeled commutative semigroup of order n in lexicographic fill
  /// order (upper triangle, row by row). With up_to_iso only the canonical
  /// representative of each relabeling class is kept.
  inline std::vector<Semigroup> enumerate_commutative(std::size_t n, bool up_to_iso = false,
                                                      std::size_t cap  = kDefaultCommutativeCap,
                                                      unsigned    jobs = 1) {
    if (n == 0) {
      throw InvalidArgument("order must be positive");
    }
    if (n > cap) {
      throw CapExceeded("enumerate_commutative", n, cap);
    }
    auto out = detail::enumerate_tables(n, true, jobs);
    if (up_to_iso) {
      std::erase_if(out, [](Semigroup const& s) { return !is_canonical(s); });
    }
    return out;
  }

  /// Every labeled semigroup of order n, row-major lexicographic order.
  inline std::vector<Semigroup> enumerate_all(std::size_t n, bool up_to_iso = false,
                                              std::size_t cap = kDefaultGeneralCap, unsigned jobs = 1) {
    if (n == 0) {
      throw InvalidArgument("order must be positive");
    }
    if (n > cap) {
      throw CapExceeded("enumerate_all", n, cap);
    }
    auto out = detail::enumerate_tables(n, false, jobs);
    if (up_to_iso) {
      std::erase_if(out, [](Semigroup const& s) { return !is_canonical(s); });
    }
    return out;
  }

  /// count random associative tables of order n from a seeded randomized
  /// depth-first search. Not uniform over semigroups; reproducible per seed.
  inline std::vector<Semigroup> sample_semigroups(std::size_t n, std::size_t count, bool commutative,
                                                  std::uint64_t seed) {
    if (n == 0 || n > kMaxOrder) {
      throw InvalidArgument("sample order out of range");
    }
    std::mt19937_64        rng(seed);
    detail::TableSearch    search(n, commutative);
    std::vector<Semigroup> out;
    for (std::size_t i = 0; i < count; ++i) {
      auto cells = search.sample(rng);
      // The constant table always completes, so the search cannot fail.
      out.emplace_back(n, std::move(*cells));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus files
  ////////////////////////////////////////////////////////////////////////

  enum class CorpusSource { Generated, Loaded };

  struct CorpusEntry {
    Semigroup    semigroup;
    bool         canonical = false;
    CorpusSource source    = CorpusSource::Generated;
  };

  inline CorpusEntry make_entry(Semigroup s, CorpusSource source) {
    bool canonical = is_canonical(s);
    return CorpusEntry{std::move(s), canonical, source};
  }

  /// Concatenated Cayley tables; blank lines and '#' comments are skipped.
  inline std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    auto                     lines = detail::content_lines(text);
    std::vector<CorpusEntry> out;
    std::size_t              pos = 0;
    while (pos < lines.size()) {
      std::size_t const header = lines[pos].number;
      try {
        out.push_back(make_entry(detail::parse_table_at(lines, pos), CorpusSource::Loaded));
      } catch (AssociativityError const& e) {
        throw ParseError(header, e.what());
      }
    }
    return out;
  }

  inline std::vector<CorpusEntry> load_corpus(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open corpus file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
  }

  /// Tables separated by one blank line.
  inline std::string format_corpus(std::span<Semigroup const> tables) {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i != 0) {
        out += '\n';
      }
      out += format_table(tables[i]);
    }
    return out;
  }

  inline void save_corpus(std::span<CorpusEntry const> entries, std::string const& path) {
    std::vector<Semigroup> tables;
    for (auto const& e : entries) {
      tables.push_back(e.semigroup);
    }
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write corpus file '" + path + "'");
    }
    out << format_corpus(tables);
    if (!out) {
      throw Error("write failed for '" + path + "'");
    }
  }

}  // namespace sepcong
