#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

std::uint32_t mod_pow(std::uint32_t base, std::uint32_t e, std::uint32_t p) {
  std::uint64_t acc = 1, b = base % p;
  while (e > 0) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  return mod_pow(a, p - 2, p);  // Fermat; p is prime and a is nonzero
}

std::size_t total_of(const Counts& c) {
  std::size_t t = 0;
  for (const auto& [var, k] : c) t += k;
  return t;
}

// All nonzero sub-counts of `c`, by an odometer over the entries.
std::vector<Counts> sub_counts(const Counts& c) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries(c.begin(),
                                                               c.end());
  std::vector<std::uint32_t> pick(entries.size(), 0);
  std::vector<Counts> out;
  while (true) {
    Counts d;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (pick[i] > 0) d[entries[i].first] = pick[i];
    }
    if (!d.empty()) out.push_back(d);
    std::size_t i = 0;
    while (i < entries.size() && pick[i] == entries[i].second) {
      pick[i] = 0;
      ++i;
    }
    if (i == entries.size()) break;
    ++pick[i];
  }
  return out;
}

Counts minus(const Counts& a, const Counts& b) {
  Counts out = a;
  for (const auto& [var, k] : b) {
    if (out[var] < k) throw std::logic_error("oracle: negative difference");
    out[var] -= k;
    if (out[var] == 0) out.erase(var);
  }
  return out;
}

// Ordered lists of `parts` nonzero counts summing to `c`.
void compositions_into(const Counts& c, std::size_t parts,
                       std::vector<Counts>& prefix,
                       std::vector<std::vector<Counts>>& out) {
  if (parts == 1) {
    if (!c.empty()) {
      prefix.push_back(c);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (const Counts& first : sub_counts(c)) {
    if (total_of(first) == total_of(c)) continue;  // leave room for the rest
    prefix.push_back(first);
    compositions_into(minus(c, first), parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Counts>> compositions(const Counts& c,
                                              std::size_t parts) {
  std::vector<std::vector<Counts>> out;
  std::vector<Counts> prefix;
  compositions_into(c, parts, prefix, out);
  return out;
}

// Ordered tuples of `k` nonempty words with combined letter counts `c`.
void word_tuples_into(const Counts& c, std::size_t k,
                      std::vector<Letters>& prefix,
                      std::vector<std::vector<Letters>>& out) {
  if (k == 1) {
    if (c.empty()) return;
    for (const Letters& w : all_words(c)) {
      prefix.push_back(w);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (const Counts& first : sub_counts(c)) {
    if (total_of(first) == total_of(c)) continue;
    for (const Letters& w : all_words(first)) {
      prefix.push_back(w);
      word_tuples_into(minus(c, first), k - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<Letters>> word_tuples(const Counts& c, std::size_t k) {
  std::vector<std::vector<Letters>> out;
  std::vector<Letters> prefix;
  word_tuples_into(c, k, prefix, out);
  return out;
}

Letters repeat(const Letters& w, std::uint32_t times) {
  Letters out;
  for (std::uint32_t i = 0; i < times; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// Every way one factor of the family can produce the counts `c`.
std::vector<Poly> factor_polys(char kind, std::uint32_t d, const Counts& c,
                               std::uint32_t p) {
  std::vector<Poly> out;
  if (kind == 'L') {
    bool divisible = !c.empty();
    Counts base;
    for (const auto& [var, k] : c) {
      if (k % p != 0) {
        divisible = false;
        break;
      }
      base[var] = k / p;
    }
    if (divisible) {
      for (const Letters& w : all_words(base)) {
        out.push_back(Poly{{repeat(w, p), 1}});
      }
    }
    for (const auto& tuple : word_tuples(c, p)) {
      out.push_back(sym_product(tuple, p));
    }
  } else {
    for (const auto& tuple : word_tuples(c, d)) {
      out.push_back(sym_product(tuple, p));
    }
  }
  return out;
}

void products_into(char kind, std::uint32_t d, std::uint32_t p,
                   const std::vector<Counts>& shape, std::size_t index,
                   const Poly& acc, std::vector<Poly>& out) {
  if (index == shape.size()) {
    out.push_back(acc);
    return;
  }
  for (const Poly& f : factor_polys(kind, d, shape[index], p)) {
    products_into(kind, d, p, shape, index + 1, mul(acc, f, p), out);
  }
}

}  // namespace

std::vector<Letters> all_words(const Counts& counts) {
  Letters sorted;
  for (const auto& [var, k] : counts) {
    for (std::uint32_t i = 0; i < k; ++i) sorted.push_back(var);
  }
  std::vector<Letters> out;
  out.push_back(sorted);
  while (std::next_permutation(sorted.begin(), sorted.end())) {
    out.push_back(sorted);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out = a;
  for (const auto& [w, c] : b) {
    const std::uint32_t v = out.count(w) ? out[w] : 0u;
    const std::uint32_t s = (v + c) % p;
    if (s == 0) {
      out.erase(w);
    } else {
      out[w] = s;
    }
  }
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Letters w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      const std::uint64_t have = out.count(w) ? out[w] : 0u;
      const std::uint64_t c =
          (static_cast<std::uint64_t>(ca) * cb + have) % p;
      if (c == 0) {
        out.erase(w);
      } else {
        out[w] = static_cast<std::uint32_t>(c);
      }
    }
  }
  return out;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
  Poly out;
  for (const auto& [w, v] : a) {
    const std::uint32_t s =
        static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p);
    if (s != 0) out[w] = s;
  }
  return out;
}

Poly sym_product(const std::vector<Letters>& words, std::uint32_t p) {
  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Poly out;
  do {
    Letters w;
    for (const std::size_t i : order) {
      w.insert(w.end(), words[i].begin(), words[i].end());
    }
    out = add(out, Poly{{w, 1 % p}}, p);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Poly> span_vectors(char kind, std::uint32_t n, std::uint32_t d,
                               const Counts& slice, std::uint32_t p) {
  std::vector<Poly> out;
  const Poly unit{{Letters{}, 1u % p}};
  for (std::uint32_t j = 1; j <= n; ++j) {
    for (const auto& shape : compositions(slice, j)) {
      products_into(kind, d, p, shape, 0, unit, out);
    }
  }
  return out;
}

Reducer::Reducer(const Counts& slice, std::uint32_t p)
    : columns_(all_words(slice)), p_(p) {}

std::vector<std::uint32_t> Reducer::to_row(const Poly& f) const {
  std::vector<std::uint32_t> row(columns_.size(), 0);
  for (const auto& [w, c] : f) {
    const auto it = std::lower_bound(columns_.begin(), columns_.end(), w);
    if (it == columns_.end() || *it != w) {
      throw std::logic_error("oracle: word outside the slice");
    }
    row[static_cast<std::size_t>(it - columns_.begin())] = c % p_;
  }
  return row;
}

bool Reducer::reduce(std::vector<std::uint32_t>& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivot_of_row_[r];
    if (row[piv] == 0) continue;
    const std::uint64_t factor = p_ - row[piv];  // row += factor * rows_[r]
    for (std::size_t c = 0; c < row.size(); ++c) {
      row[c] = static_cast<std::uint32_t>((row[c] + factor * rows_[r][c]) % p_);
    }
  }
  return std::any_of(row.begin(), row.end(),
                     [](std::uint32_t v) { return v != 0; });
}

void Reducer::insert(const Poly& f) {
  std::vector<std::uint32_t> row = to_row(f);
  if (!reduce(row)) return;
  std::size_t piv = 0;
  while (row[piv] == 0) ++piv;
  const std::uint32_t inv = mod_inv(row[piv], p_);
  for (auto& v : row) {
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p_);
  }
  rows_.push_back(std::move(row));
  pivot_of_row_.push_back(piv);
}

bool Reducer::contains(const Poly& target) const {
  std::vector<std::uint32_t> row = to_row(target);
  return !reduce(row);
}

std::size_t rank_of(const std::vector<Poly>& vectors, const Counts& slice,
                    std::uint32_t p) {
  Reducer m(slice, p);
  for (const Poly& f : vectors) m.insert(f);
  return m.rank();
}

bool in_span(const Poly& target, const std::vector<Poly>& vectors,
             const Counts& slice, std::uint32_t p) {
  Reducer m(slice, p);
  for (const Poly& f : vectors) m.insert(f);
  return m.contains(target);
}

}  // namespace oracle
