#include "freespan/tspace.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "freespan/parse.hpp"

namespace freespan {

namespace {

// Barrett-style reduction by a runtime modulus; the hot loops accumulate
// products of residues into uint64 and only reduce when a value is read.
struct Mod {
  std::uint32_t p;
  std::uint64_t magic;  // floor((2^64 - 1) / p)

  explicit Mod(std::uint32_t p) : p(p), magic(~0ull / p) {}

  std::uint32_t reduce(std::uint64_t x) const {
    const std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

// Row-reduced dense basis over one slice.  Columns are slice words in
// ascending deg-lex order, so the pivot of a row is its greatest nonzero
// column.  Rows are monic at their pivot and back-reduced against every new
// pivot.  Optionally each row carries a "combo" vector expressing it as a
// combination of selected input generators (used for certificates).
struct DenseBasis {
  Mod mod;
  std::size_t cols;
  bool track;
  std::size_t combo_width;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::vector<std::uint32_t>> combos;
  std::vector<std::int64_t> pivot_row_of_col;
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<std::uint64_t> creators;  // generator index that created each row

  DenseBasis(std::uint32_t p, std::size_t cols, bool track = false,
             std::size_t combo_width = 0)
      : mod(p),
        cols(cols),
        track(track),
        combo_width(combo_width),
        pivot_row_of_col(cols, -1) {}

  std::size_t rank() const { return rows.size(); }

  // Fully reduces a work vector in place (entries end up < p); applies the
  // same row operations to *cw when tracking.  Returns the greatest nonzero
  // column after reduction, or -1 when the vector reduced to zero.
  std::int64_t reduce_work(std::vector<std::uint64_t>& w,
                           std::vector<std::uint64_t>* cw) const {
    std::int64_t lead = -1;
    for (std::int64_t col = static_cast<std::int64_t>(cols) - 1; col >= 0; --col) {
      const std::uint32_t r = mod.reduce(w[static_cast<std::size_t>(col)]);
      if (r == 0) {
        w[static_cast<std::size_t>(col)] = 0;
        continue;
      }
      const std::int64_t pr = pivot_row_of_col[static_cast<std::size_t>(col)];
      if (pr < 0) {
        w[static_cast<std::size_t>(col)] = r;
        if (lead < 0) lead = col;
        continue;
      }
      const std::uint64_t c = mod.p - r;  // w += c * row zeroes this column
      const auto& row = rows[static_cast<std::size_t>(pr)];
      for (std::size_t i = 0; i < static_cast<std::size_t>(col); ++i) {
        w[i] += c * row[i];
      }
      w[static_cast<std::size_t>(col)] = 0;
      if (cw) {
        const auto& rc = combos[static_cast<std::size_t>(pr)];
        for (std::size_t i = 0; i < combo_width; ++i) (*cw)[i] += c * rc[i];
      }
    }
    return lead;
  }

  bool insert(std::vector<std::uint64_t> w, std::uint64_t creator,
              std::vector<std::uint64_t> cw = {}) {
    const std::int64_t lead = reduce_work(w, track ? &cw : nullptr);
    if (lead < 0) return false;
    const std::size_t lc = static_cast<std::size_t>(lead);
    const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(w[lc]), mod.p);
    std::vector<std::uint32_t> row(cols, 0);
    for (std::size_t i = 0; i <= lc; ++i) row[i] = mod.reduce(w[i] * inv);
    std::vector<std::uint32_t> combo;
    if (track) {
      combo.resize(combo_width);
      for (std::size_t i = 0; i < combo_width; ++i) combo[i] = mod.reduce(cw[i] * inv);
    }
    // Back-reduce: the new pivot column must vanish from every other row.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint32_t c = rows[r][lc];
      if (c == 0) continue;
      const std::uint64_t k = mod.p - c;
      auto& rr = rows[r];
      for (std::size_t i = 0; i <= lc; ++i) {
        rr[i] = mod.reduce(static_cast<std::uint64_t>(rr[i]) + k * row[i]);
      }
      if (track) {
        auto& rc = combos[r];
        for (std::size_t i = 0; i < combo_width; ++i) {
          rc[i] = mod.reduce(static_cast<std::uint64_t>(rc[i]) + k * combo[i]);
        }
      }
    }
    pivot_row_of_col[lc] = static_cast<std::int64_t>(rows.size());
    pivot_col_of_row.push_back(lc);
    rows.push_back(std::move(row));
    if (track) combos.push_back(std::move(combo));
    creators.push_back(creator);
    return true;
  }
};

std::vector<std::uint64_t> to_dense(const Polynomial& f,
                                    const std::vector<Word>& words) {
  std::vector<std::uint64_t> v(words.size(), 0);
  for (const auto& [w, c] : f.terms()) {
    const auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) {
      throw usage_error("polynomial has a term outside the slice");
    }
    v[static_cast<std::size_t>(it - words.begin())] = c;
  }
  return v;
}

template <typename T>
Polynomial from_dense(const std::vector<T>& v, const std::vector<Word>& words,
                      Prime p) {
  Polynomial out(p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.add_term(words[i], static_cast<std::int64_t>(v[i]));
  }
  return out;
}

// All nonzero multidegrees componentwise below `t`, odometer order.
std::vector<MultiDegree> nonzero_subdegrees(const MultiDegree& t) {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> vars(
      t.counts().begin(), t.counts().end());
  std::vector<std::uint32_t> cur(vars.size(), 0);
  std::vector<MultiDegree> out;
  while (true) {
    std::size_t i = vars.size();
    bool wrapped = true;
    while (i > 0) {
      --i;
      if (cur[i] < vars[i].second) {
        ++cur[i];
        for (std::size_t j = i + 1; j < vars.size(); ++j) cur[j] = 0;
        wrapped = false;
        break;
      }
    }
    if (wrapped) break;
    MultiDegree d;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (cur[j]) d.add(vars[j].first, cur[j]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

MultiDegree floor_divide(const MultiDegree& d, std::uint32_t k) {
  MultiDegree out;
  for (const auto& [var, c] : d.counts()) {
    if (c / k > 0) out.add(var, c / k);
  }
  return out;
}

using Clock = std::chrono::steady_clock;

// Shared bookkeeping for one family_generators call.
struct Stream {
  Prime p;
  const Budget& budget;
  const GenSink& sink;
  Clock::time_point deadline;
  std::uint64_t emitted = 0;
  bool complete = true;    // false <=> a budget stopped the enumeration
  bool keep_going = true;  // false <=> stop unwinding (budget or sink)

  Stream(Prime p, const Budget& budget, const GenSink& sink)
      : p(p), budget(budget), sink(sink), deadline(Clock::now() + budget.time_limit) {}

  bool out_of_budget() {
    if (emitted >= budget.max_generators || Clock::now() > deadline) {
      complete = false;
      keep_going = false;
      return true;
    }
    return false;
  }

  // False tells enumeration loops to unwind.
  bool emit(const Polynomial& g, const GenInfo& info) {
    if (!keep_going) return false;
    if (g.is_zero()) return true;
    if (out_of_budget()) return false;
    const std::uint64_t idx = emitted++;
    if (!sink(idx, g, info)) keep_going = false;
    return keep_going;
  }

  // Cache of enumerate_words keyed by multidegree; the per-list cap is the
  // dimension budget (a factor word list can never be larger than a slice
  // basis the engine is willing to handle).
  std::map<MultiDegree, std::vector<Word>> word_cache;
  const std::vector<Word>& words(const MultiDegree& d) {
    auto it = word_cache.find(d);
    if (it == word_cache.end()) {
      it = word_cache.emplace(d, enumerate_words(d, budget.max_dimension)).first;
    }
    return it->second;
  }
};

// Enumerates the sorted multisets {w1 <= ... <= w_slots} of nonempty words
// whose multidegrees sum to `target`; yield returns false to stop.
bool for_each_word_multiset(Stream& st, const MultiDegree& target,
                            std::uint32_t slots, const Word& min_word,
                            std::vector<Word>& cur,
                            const std::function<bool(const std::vector<Word>&)>& yield) {
  if (slots == 0) {
    if (!target.empty()) return true;
    return yield(cur);
  }
  if (target.total() < slots) return true;  // every slot needs a nonempty word
  for (const MultiDegree& e : nonzero_subdegrees(target)) {
    if (target.total() - e.total() < slots - 1u) continue;
    for (const Word& w : st.words(e)) {
      if (w < min_word) continue;
      cur.push_back(w);
      const bool cont =
          for_each_word_multiset(st, target - e, slots - 1, w, cur, yield);
      cur.pop_back();
      if (!cont) return false;
    }
  }
  return true;
}

Polynomial sd_instance(Prime p, const std::vector<Word>& args) {
  std::vector<Polynomial> polys;
  polys.reserve(args.size());
  for (const Word& w : args) polys.push_back(Polynomial::monomial(p, w));
  return s_d(polys);
}

// Materialized factor choices for one part of a product split.
struct FactorOptions {
  std::vector<GenInfo::Factor> descs;
  std::vector<Polynomial> polys;
};

using OptionsCache = std::map<std::pair<int, MultiDegree>, FactorOptions>;

// Factor options for an R part (S_d instances) or an L part (word powers
// followed by S_p instances).  `sd` is d for R and p for L.
const FactorOptions& factor_options(Stream& st, OptionsCache& cache, int kind_tag,
                                    const MultiDegree& part, std::uint32_t sd,
                                    bool with_powers) {
  const auto key = std::make_pair(kind_tag, part);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FactorOptions opts;
  if (with_powers && part.divisible_by(sd)) {
    for (const Word& m : st.words(part.divided_by(sd))) {
      GenInfo::Factor f;
      f.is_power = true;
      f.base = m;
      f.exponent = sd;
      opts.descs.push_back(f);
      opts.polys.push_back(Polynomial::monomial(st.p, m.pow(sd)));
    }
  }
  std::vector<Word> cur;
  for_each_word_multiset(
      st, part, sd, Word::one(), cur, [&](const std::vector<Word>& args) {
        if (opts.polys.size() >= st.budget.max_generators) {
          throw budget_error("factor enumeration exceeded the generator cap");
        }
        GenInfo::Factor f;
        f.args = args;
        opts.descs.push_back(std::move(f));
        opts.polys.push_back(sd_instance(st.p, args));
        return true;
      });
  return cache.emplace(key, std::move(opts)).first->second;
}

bool emit_products(Stream& st, const std::vector<const FactorOptions*>& options,
                   std::size_t k, const Polynomial& acc,
                   std::vector<GenInfo::Factor>& chosen) {
  if (k == options.size()) {
    return st.emit(acc, GenInfo::product(chosen));
  }
  const FactorOptions& opt = *options[k];
  for (std::size_t i = 0; i < opt.polys.size(); ++i) {
    chosen.push_back(opt.descs[i]);
    const bool cont = emit_products(st, options, k + 1, acc * opt.polys[i], chosen);
    chosen.pop_back();
    if (!cont) return false;
  }
  return true;
}

// Streams the R(n, d) or L(n) spanning set of the slice.
void stream_products(Stream& st, const GeneratorFamily& family,
                     const MultiDegree& slice) {
  const bool is_l = family.kind == GeneratorFamily::Kind::L;
  const std::uint32_t sd = is_l ? st.p.value() : family.d;
  OptionsCache cache;
  for (std::uint32_t j = 1; j <= family.n && st.keep_going; ++j) {
    if (j == 1) {
      // Single factor: stream straight off the multiset enumeration.
      if (is_l && slice.divisible_by(sd)) {
        for (const Word& m : st.words(slice.divided_by(sd))) {
          GenInfo::Factor f;
          f.is_power = true;
          f.base = m;
          f.exponent = sd;
          if (!st.emit(Polynomial::monomial(st.p, m.pow(sd)),
                       GenInfo::product({f}))) {
            return;
          }
        }
      }
      std::vector<Word> cur;
      for_each_word_multiset(st, slice, sd, Word::one(), cur,
                             [&](const std::vector<Word>& args) {
                               GenInfo::Factor f;
                               f.args = args;
                               return st.emit(sd_instance(st.p, args),
                                              GenInfo::product({std::move(f)}));
                             });
      if (!st.keep_going) return;
      continue;
    }
    for (const auto& split : split_multidegree(slice, j)) {
      bool feasible = true;
      std::vector<const FactorOptions*> options;
      options.reserve(split.size());
      for (const MultiDegree& part : split) {
        const bool with_powers = is_l && part.divisible_by(sd);
        if (!with_powers && part.total() < sd) {
          feasible = false;  // no S instance fits and no power either
          break;
        }
        options.push_back(
            &factor_options(st, cache, is_l ? 1 : 0, part, sd, is_l));
        if (options.back()->polys.empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<GenInfo::Factor> chosen;
      if (!emit_products(st, options, 0, Polynomial::one(st.p), chosen)) return;
    }
  }
}

// A polarized variant of one user generator, ready for word substitution.
struct TVariant {
  Polynomial poly;  // multihomogeneous
  std::vector<std::pair<std::uint32_t, std::uint32_t>> var_degrees;  // sorted
};

std::vector<TVariant> t_variants(const GeneratorFamily& family, Prime p) {
  std::vector<Polynomial> bases;
  for (const Polynomial& g : family.generators) {
    if (g.prime() != p) {
      throw usage_error("family generators are over a different modulus");
    }
    for (auto& [d, comp] : g.components()) {
      (void)d;
      bases.push_back(comp);
    }
  }
  std::vector<TVariant> out;
  for (const Polynomial& base : bases) {
    const MultiDegree md = *base.homogeneous_multidegree();
    std::vector<std::uint32_t> repeated;
    for (const auto& [var, deg] : md.counts()) {
      if (deg >= 2) repeated.push_back(var);
    }
    if (repeated.size() > 16) {
      throw budget_error("too many repeated variables to polarize");
    }
    for (std::uint32_t mask = 0; mask < (1u << repeated.size()); ++mask) {
      Polynomial h = base;
      std::uint32_t next_fresh = base.max_variable() + 1;
      for (std::size_t i = 0; i < repeated.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        const std::uint32_t deg = md.count(repeated[i]);
        std::vector<std::uint32_t> fresh(deg);
        for (std::uint32_t k = 0; k < deg; ++k) fresh[k] = next_fresh++;
        h = polarize_full(h, repeated[i], fresh);
      }
      const MultiDegree hd = *h.homogeneous_multidegree();
      TVariant v{std::move(h), {}};
      v.var_degrees.assign(hd.counts().begin(), hd.counts().end());
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Enumerates word images for the variant's variables so the instance lands
// exactly in the slice, then emits the substituted instances.
bool emit_instances(Stream& st, const TVariant& variant, std::size_t vi,
                    const MultiDegree& remaining,
                    std::map<std::uint32_t, Word>& images) {
  if (vi == variant.var_degrees.size()) {
    if (!remaining.empty()) return true;
    const Polynomial inst = substitute_words(variant.poly, images);
    return st.emit(inst, GenInfo::instance(&inst));
  }
  const auto [var, deg] = variant.var_degrees[vi];
  std::size_t min_later = 0;  // letters the later variables must consume
  for (std::size_t k = vi + 1; k < variant.var_degrees.size(); ++k) {
    min_later += variant.var_degrees[k].second;
  }
  if (vi + 1 == variant.var_degrees.size()) {
    // Last variable must absorb the remainder exactly.
    if (remaining.empty() || !remaining.divisible_by(deg)) return true;
    const MultiDegree d = remaining.divided_by(deg);
    for (const Word& w : st.words(d)) {
      images[var] = w;
      const bool cont = emit_instances(st, variant, vi + 1, remaining - d.scaled(deg), images);
      images.erase(var);
      if (!cont) return false;
    }
    return true;
  }
  for (const MultiDegree& d : nonzero_subdegrees(floor_divide(remaining, deg))) {
    const MultiDegree used = d.scaled(deg);
    if (remaining.total() - used.total() < min_later) continue;
    for (const Word& w : st.words(d)) {
      images[var] = w;
      const bool cont = emit_instances(st, variant, vi + 1, remaining - used, images);
      images.erase(var);
      if (!cont) return false;
    }
  }
  return true;
}

void stream_instances(Stream& st, const GeneratorFamily& family,
                      const MultiDegree& slice) {
  for (const TVariant& variant : t_variants(family, st.p)) {
    if (!st.keep_going) return;
    std::map<std::uint32_t, Word> images;
    if (!emit_instances(st, variant, 0, slice, images)) return;
  }
}

std::string describe_factor(const GenInfo::Factor& f) {
  if (f.is_power) {
    return "(" + format(f.base) + ")^" + std::to_string(f.exponent);
  }
  std::string out = "S(" + std::to_string(f.args.size()) + ";";
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    out += (i ? ", " : " ") + format(f.args[i]);
  }
  out += ")";
  return out;
}

}  // namespace

GeneratorFamily GeneratorFamily::r_family(std::uint32_t n, std::uint32_t d) {
  if (n < 1 || d < 1) throw usage_error("R(n, d) needs n >= 1 and d >= 1");
  GeneratorFamily f;
  f.kind = Kind::R;
  f.n = n;
  f.d = d;
  return f;
}

GeneratorFamily GeneratorFamily::l_family(std::uint32_t n) {
  if (n < 1) throw usage_error("L(n) needs n >= 1");
  GeneratorFamily f;
  f.kind = Kind::L;
  f.n = n;
  return f;
}

GeneratorFamily GeneratorFamily::t_space_of(std::vector<Polynomial> generators) {
  if (generators.empty()) {
    throw usage_error("a generator list must contain at least one polynomial");
  }
  for (const Polynomial& g : generators) {
    if (g.is_zero()) throw usage_error("generators must be nonzero");
    if (!g.coeff(Word::one()).is_zero()) {
      throw usage_error("generators must be constant-free");
    }
    if (g.prime() != generators[0].prime()) {
      throw usage_error("generators over mixed moduli");
    }
  }
  GeneratorFamily f;
  f.kind = Kind::TSpace;
  f.generators = std::move(generators);
  return f;
}

bool GeneratorFamily::exact_semantics() const {
  if (kind != Kind::TSpace) return true;
  for (const Polynomial& g : generators) {
    const auto md = g.homogeneous_multidegree();
    if (!md) return false;
    for (const auto& [var, deg] : md->counts()) {
      (void)var;
      if (deg > 1) return false;
    }
  }
  return true;
}

std::string GeneratorFamily::to_string() const {
  switch (kind) {
    case Kind::R:
      return "R(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
    case Kind::L:
      return "L(n=" + std::to_string(n) + ")";
    case Kind::TSpace: {
      std::string out = "T[";
      for (std::size_t i = 0; i < generators.size(); ++i) {
        out += (i ? "; " : "") + format(generators[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

std::uint64_t count_words(const MultiDegree& d) {
  constexpr std::uint64_t kCap = 1ull << 63;
  unsigned __int128 acc = 1;
  std::uint64_t remaining = d.total();
  for (const auto& [var, c] : d.counts()) {
    (void)var;
    for (std::uint32_t i = 1; i <= c; ++i) {
      acc = acc * (remaining - c + i) / i;  // exact at every step
      if (acc > kCap) return kCap;
    }
    remaining -= c;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Word> enumerate_words(const MultiDegree& d, std::uint64_t max_count) {
  const std::uint64_t count = count_words(d);
  if (count > max_count) {
    throw budget_error("slice " + d.to_string() + " has " + std::to_string(count) +
                       " words, more than the cap of " + std::to_string(max_count));
  }
  std::vector<std::uint32_t> letters;
  letters.reserve(d.total());
  for (const auto& [var, c] : d.counts()) {
    for (std::uint32_t i = 0; i < c; ++i) letters.push_back(var);
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  do {
    out.push_back(Word(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<std::vector<MultiDegree>> split_multidegree(const MultiDegree& target,
                                                        std::uint32_t parts) {
  if (parts == 0) throw usage_error("a split needs at least one part");
  std::vector<std::vector<MultiDegree>> out;
  std::vector<MultiDegree> cur;
  const std::function<void(const MultiDegree&, std::uint32_t)> rec =
      [&](const MultiDegree& remaining, std::uint32_t left) {
        if (left == 1) {
          if (!remaining.empty()) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
          }
          return;
        }
        for (const MultiDegree& e : nonzero_subdegrees(remaining)) {
          if (remaining.total() - e.total() < left - 1u) continue;
          cur.push_back(e);
          rec(remaining - e, left - 1);
          cur.pop_back();
        }
      };
  rec(target, parts);
  return out;
}

GenInfo GenInfo::product(std::vector<Factor> factors) {
  GenInfo info;
  info.factors_ = std::move(factors);
  return info;
}

GenInfo GenInfo::instance(const Polynomial* poly) {
  GenInfo info;
  info.instance_ = poly;
  return info;
}

std::string GenInfo::describe() const {
  if (instance_) return format(*instance_);
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " * ";
    out += describe_factor(factors_[i]);
  }
  return out;
}

StreamResult family_generators(const GeneratorFamily& family,
                               const MultiDegree& slice, Prime p,
                               const Budget& budget, const GenSink& sink) {
  Stream st(p, budget, sink);
  try {
    if (family.kind == GeneratorFamily::Kind::TSpace) {
      stream_instances(st, family, slice);
    } else {
      stream_products(st, family, slice);
    }
  } catch (const budget_error&) {
    st.complete = false;
  }
  return StreamResult{st.emitted, st.complete};
}

struct SpanBasis::Impl {
  DenseBasis basis;
};

SpanBasis::SpanBasis(Prime p, const MultiDegree& slice, std::uint64_t max_dimension)
    : p_(p),
      slice_(slice),
      words_(enumerate_words(slice, max_dimension)),
      impl_(new Impl{DenseBasis(p.value(), words_.size())}) {}

SpanBasis::~SpanBasis() = default;
SpanBasis::SpanBasis(SpanBasis&&) noexcept = default;
SpanBasis& SpanBasis::operator=(SpanBasis&&) noexcept = default;

std::size_t SpanBasis::dimension() const { return impl_->basis.rank(); }

Polynomial SpanBasis::insert(const Polynomial& g) {
  if (g.is_zero()) return g;
  if (g.prime() != p_) throw usage_error("insert over a different modulus");
  const auto md = g.homogeneous_multidegree();
  if (!md) throw usage_error("insert needs a multihomogeneous polynomial");
  if (*md != slice_) throw usage_error("insert outside the basis slice");
  DenseBasis& b = impl_->basis;
  if (!b.insert(to_dense(g, words_), b.rank())) return Polynomial::zero(p_);
  return from_dense(b.rows.back(), words_, p_);
}

Polynomial SpanBasis::reduce(const Polynomial& g) const {
  if (g.is_zero()) return g;
  if (g.prime() != p_) throw usage_error("reduce over a different modulus");
  if (!g.homogeneous_multidegree() || *g.homogeneous_multidegree() != slice_) {
    throw usage_error("reduce outside the basis slice");
  }
  std::vector<std::uint64_t> w = to_dense(g, words_);
  impl_->basis.reduce_work(w, nullptr);
  return from_dense(w, words_, p_);
}

std::map<Word, Polynomial> SpanBasis::rows() const {
  std::map<Word, Polynomial> out;
  const DenseBasis& b = impl_->basis;
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    out.emplace(words_[b.pivot_col_of_row[r]], from_dense(b.rows[r], words_, p_));
  }
  return out;
}

namespace {

std::vector<CertificateEntry> build_certificate(
    const Polynomial& target, const GeneratorFamily& family,
    const MultiDegree& slice, Prime p, const Budget& budget,
    const std::vector<std::uint64_t>& creators, const std::vector<Word>& words) {
  // Second deterministic pass: only the generators that created pivot rows
  // matter (everything else reduced to zero against them), so re-stream,
  // keep those, and track how each basis row combines them.
  std::map<std::uint64_t, std::size_t> position;
  for (std::size_t i = 0; i < creators.size(); ++i) position.emplace(creators[i], i);
  const std::uint64_t last = creators.empty() ? 0 : creators.back();

  DenseBasis basis(p.value(), words.size(), /*track=*/true, creators.size());
  std::vector<std::string> descriptions(creators.size());
  Budget fresh = budget;  // the time spent in pass one must not starve this pass
  family_generators(family, slice, p, fresh,
                    [&](std::uint64_t idx, const Polynomial& g, const GenInfo& info) {
                      const auto it = position.find(idx);
                      if (it != position.end()) {
                        descriptions[it->second] = info.describe();
                        std::vector<std::uint64_t> cw(creators.size(), 0);
                        cw[it->second] = 1;
                        basis.insert(to_dense(g, words), idx, std::move(cw));
                      }
                      return idx < last;
                    });

  std::vector<std::uint64_t> t = to_dense(target, words);
  std::vector<std::uint64_t> combo(creators.size(), 0);
  if (basis.reduce_work(t, &combo) >= 0) {
    throw std::logic_error("certificate pass failed to reproduce the reduction");
  }
  // t + sum combo[i] * gen_i = 0, so the certificate coefficients are the
  // negated combo entries.
  std::vector<CertificateEntry> cert;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    const std::uint32_t c = basis.mod.reduce(combo[i]);
    if (c == 0) continue;
    cert.push_back(CertificateEntry{descriptions[i],
                                    Fp(p, static_cast<std::int64_t>(p.value() - c))});
  }
  return cert;
}

}  // namespace

MembershipVerdict membership(const Polynomial& target,
                             const GeneratorFamily& family, const Budget& budget,
                             bool want_certificate) {
  const Prime p = target.prime();
  MembershipVerdict v;
  v.semantics =
      family.exact_semantics() ? SpanSemantics::Exact : SpanSemantics::Polarized;
  if (target.is_zero()) {
    v.status = MembershipStatus::Member;
    if (want_certificate) v.certificate.emplace();
    v.residue = Polynomial::zero(p);
    return v;
  }
  const auto md = target.homogeneous_multidegree();
  if (!md) {
    std::string what = "target is not multihomogeneous; components:";
    for (const auto& [d, comp] : target.components()) {
      (void)comp;
      what += " " + d.to_string();
    }
    throw usage_error(what);
  }
  v.slice = *md;

  std::vector<Word> words;
  try {
    words = enumerate_words(v.slice, budget.max_dimension);
  } catch (const budget_error&) {
    v.status = MembershipStatus::BudgetExceeded;
    return v;
  }

  DenseBasis basis(p.value(), words.size());
  const std::vector<std::uint64_t> target_dense = to_dense(target, words);
  bool member = false;
  std::uint32_t batch = 0;
  const StreamResult sr = family_generators(
      family, v.slice, p, budget,
      [&](std::uint64_t idx, const Polynomial& g, const GenInfo&) {
        basis.insert(to_dense(g, words), idx);
        if (++batch == 256) {
          batch = 0;
          if (basis.rank() == words.size()) {
            member = true;
            return false;
          }
          std::vector<std::uint64_t> t = target_dense;
          if (basis.reduce_work(t, nullptr) < 0) {
            member = true;
            return false;
          }
        }
        return true;
      });

  v.generators_used = sr.emitted;
  v.dimension = basis.rank();
  if (!member) {
    std::vector<std::uint64_t> t = target_dense;
    if (basis.reduce_work(t, nullptr) < 0) {
      member = true;
    } else {
      v.residue = from_dense(t, words, p);
    }
  }
  if (member) {
    v.status = MembershipStatus::Member;
    v.residue = Polynomial::zero(p);
    if (want_certificate) {
      v.certificate =
          build_certificate(target, family, v.slice, p, budget, basis.creators, words);
    }
  } else {
    v.status = sr.complete ? MembershipStatus::NotMember
                           : MembershipStatus::BudgetExceeded;
  }
  return v;
}

std::uint64_t span_dimension(const GeneratorFamily& family,
                             const MultiDegree& slice, Prime p,
                             const Budget& budget) {
  const std::vector<Word> words = enumerate_words(slice, budget.max_dimension);
  DenseBasis basis(p.value(), words.size());
  const StreamResult sr = family_generators(
      family, slice, p, budget,
      [&](std::uint64_t idx, const Polynomial& g, const GenInfo&) {
        basis.insert(to_dense(g, words), idx);
        return basis.rank() < words.size();  // full rank cannot grow further
      });
  if (!sr.complete) {
    throw budget_error("generator enumeration for " + family.to_string() + " at " +
                       slice.to_string() + " was truncated by the budget");
  }
  return basis.rank();
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member:
      return "Member";
    case MembershipStatus::NotMember:
      return "NotMember";
    case MembershipStatus::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

const char* to_string(SpanSemantics s) {
  return s == SpanSemantics::Exact ? "exact" : "polarized";
}

}  // namespace freespan
