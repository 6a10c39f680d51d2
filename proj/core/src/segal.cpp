#include "pgd/segal.hpp"

#include <algorithm>
#include <unordered_map>

namespace pgd {

std::string SegalVariant::to_string() const {
  switch (kind) {
    case SegalKind::LowerOdd: return "lower-" + std::to_string(2 * k - 1);
    case SegalKind::LowerEven: return "lower-" + std::to_string(2 * k);
    case SegalKind::UpperEven: return "upper-" + std::to_string(2 * k);
    case SegalKind::UpperOdd: return "upper-" + std::to_string(2 * k + 1);
  }
  return "?";
}

SegalVariant SegalVariant::parse(const std::string& name, int k) {
  SegalVariant v;
  v.k = k;
  if (name == "lower-odd") v.kind = SegalKind::LowerOdd;
  else if (name == "lower-even") v.kind = SegalKind::LowerEven;
  else if (name == "upper-even") v.kind = SegalKind::UpperEven;
  else if (name == "upper-odd") v.kind = SegalKind::UpperOdd;
  else throw FormatError("unknown Segal variant: " + name);
  if (k < 1) throw FormatError("k must be positive");
  return v;
}

std::vector<GappedSet> gapped_subsets(int n, int size, const SegalVariant& v) {
  std::vector<GappedSet> out;
  if (size < 1) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back({n, cur});
      return;
    }
    int remaining = size - static_cast<int>(cur.size());
    for (int i = next; i + 2 * (remaining - 1) <= n; ++i) {
      if (i == 0 && v.excludes_bottom()) continue;
      if (i == n && v.excludes_top()) continue;
      cur.push_back(i);
      rec(i + 2);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

struct Interned {
  std::vector<Simplex> cells;
  std::unordered_map<Simplex, int, VectorHash> index;
  explicit Interned(std::vector<Simplex> c) : cells(std::move(c)) {
    index.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], static_cast<int>(i));
  }
  int id(const Simplex& s) const {
    auto it = index.find(s);
    if (it == index.end()) throw MathError("face lies outside the simplex set: " + format_ints(s));
    return it->second;
  }
};

// faces[x*(n+1)+i] = id of d_i x.
std::vector<int> face_table(const SymSet& x, const Interned& top, const Interned& below, int n) {
  std::vector<int> out(top.cells.size() * (n + 1));
  for (std::size_t c = 0; c < top.cells.size(); ++c)
    for (int i = 0; i <= n; ++i) out[c * (n + 1) + i] = below.id(x.face(i, n, top.cells[c]));
  return out;
}

}  // namespace

SegalResult check_segal_generic(const SymSet& x, const SegalVariant& v, int n_max, const GenericOptions& opt) {
  SegalResult res;
  res.n_max = n_max;
  int size = v.k + 1;
  std::size_t work = 0;
  for (int n = std::max(opt.n_min, 2 * v.k); n <= n_max; ++n) {
    auto sets = gapped_subsets(n, size, v);
    if (opt.endpoint_reduction && v.kind == SegalKind::LowerOdd)
      std::erase_if(sets, [&](const GappedSet& g) { return g.members.front() != 0 || g.members.back() != n; });
    if (opt.symmetric_reduction && x.symmetric() && sets.size() > 1) sets.resize(1);
    if (sets.empty()) continue;
    Interned top(x.simplices(n)), mid(x.simplices(n - 1)), low(x.simplices(n - 2));
    auto ftop = face_table(x, top, mid, n);
    auto fmid = face_table(x, mid, low, n - 1);
    int w1 = n + 1, w2 = n;
    for (const auto& g : sets) {
      const auto& I = g.members;
      std::unordered_map<std::vector<int>, std::pair<int, int>, VectorHash> fillers;
      for (std::size_t c = 0; c < top.cells.size(); ++c) {
        std::vector<int> key(size);
        for (int t = 0; t < size; ++t) key[t] = ftop[c * w1 + I[t]];
        auto& slot = fillers[key];
        if (slot.first++ == 0) slot.second = static_cast<int>(c);
      }
      // by_prefix[t] groups (n-1)-simplices by their faces at I[0..t-1].
      std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VectorHash>> by_prefix(size);
      for (int t = 1; t < size; ++t)
        for (std::size_t c = 0; c < mid.cells.size(); ++c) {
          std::vector<int> key(t);
          for (int s = 0; s < t; ++s) key[s] = fmid[c * w2 + I[s]];
          by_prefix[t][key].push_back(static_cast<int>(c));
        }
      std::vector<int> fam(size);
      std::optional<SegalWitness> found;
      std::function<void(int)> rec = [&](int t) {
        if (found) return;
        if (t == size) {
          ++res.families_checked;
          auto it = fillers.find(fam);
          int count = it == fillers.end() ? 0 : it->second.first;
          if (count != 1) {
            SegalWitness w;
            w.n = n;
            w.I = I;
            w.fillers = count;
            w.reason = count == 0 ? "missing filler" : "non-unique filler";
            for (int s = 0; s < size; ++s) w.faces.push_back({I[s], mid.cells[fam[s]]});
            found = w;
          }
          return;
        }
        if (++work > opt.budget) throw BudgetExceeded("generic Segal check budget exceeded");
        if (t == 0) {
          for (std::size_t c = 0; c < mid.cells.size() && !found; ++c) {
            fam[0] = static_cast<int>(c);
            rec(1);
          }
          return;
        }
        std::vector<int> key(t);
        for (int s = 0; s < t; ++s) key[s] = fmid[fam[s] * w2 + I[t] - 1];
        auto it = by_prefix[t].find(key);
        if (it == by_prefix[t].end()) return;
        for (int cand : it->second) {
          if (found) return;
          fam[t] = cand;
          rec(t + 1);
        }
      };
      rec(0);
      if (found) {
        res.pass = false;
        res.witness = found;
        return res;
      }
    }
  }
  return res;
}

SegalResult check_lower_segal_spiny(const PartialGroupoid& pg, int k, int n_max, std::size_t budget) {
  SegalResult res;
  res.n_max = n_max;
  std::size_t work = 0;
  for (int a = 0; a < pg.num_objects(); ++a) {
    const auto& pool = pg.edges_from(a);
    for (int n = k + 1; n <= n_max; ++n) {
      std::optional<SegalWitness> found;
      pg.for_each_star(a, n - 1, [&](const std::vector<int>& face) {
        if (static_cast<int>(face.size()) != n - 1) return true;
        for (int e : pool) {
          if (std::binary_search(face.begin(), face.end(), e)) continue;
          if (++work > budget) throw BudgetExceeded("starry Segal check budget exceeded");
          std::vector<int> star = face;
          star.insert(std::upper_bound(star.begin(), star.end(), e), e);
          if (pg.is_star_simplex(a, star)) continue;
          std::vector<int> good;
          bool canonical = true;
          std::vector<int> sub;
          for (int pos = 0; pos < n; ++pos) {
            sub = star;
            sub.erase(sub.begin() + pos);
            if (!pg.is_star_simplex(a, sub)) continue;
            if (good.empty() && star[pos] != e) {
              canonical = false;
              break;
            }
            good.push_back(pos);
          }
          if (!canonical) continue;
          ++res.families_checked;
          if (static_cast<int>(good.size()) >= k + 1) {
            SegalWitness w;
            w.n = n;
            w.word = star;
            w.reason = "word does not lift";
            for (int s = 0; s <= k; ++s) {
              w.I.push_back(good[s] + 1);
              sub = star;
              sub.erase(sub.begin() + good[s]);
              w.faces.push_back({good[s] + 1, sub});
            }
            found = w;
            return false;
          }
        }
        return true;
      }, budget);
      if (found) {
        res.pass = false;
        res.witness = found;
        return res;
      }
    }
  }
  return res;
}

std::optional<std::vector<int>> word_face(const EdgySet& x, const std::vector<int>& w, int i) {
  int n = static_cast<int>(w.size());
  std::vector<int> out;
  if (i == 0) return std::vector<int>(w.begin() + 1, w.end());
  if (i == n) return std::vector<int>(w.begin(), w.end() - 1);
  int c = x.compose(w[i - 1], w[i]);
  if (c < 0) return std::nullopt;
  out.assign(w.begin(), w.begin() + (i - 1));
  out.push_back(c);
  out.insert(out.end(), w.begin() + i + 1, w.end());
  return out;
}

SegalResult check_lower_segal_words(const EdgySet& x, int k, int n_max, const WordOptions& opt) {
  SegalResult res;
  res.n_max = n_max;
  SegalVariant v{SegalKind::LowerOdd, k};
  int ne = x.num_edges();
  std::vector<std::vector<std::pair<int, int>>> split(ne);
  for (int f = 0; f < ne; ++f)
    for (int g = 0; g < ne; ++g) {
      if (x.tgt(f) != x.src(g)) continue;
      int h = x.compose(f, g);
      if (h >= 0) split[h].emplace_back(f, g);
    }
  std::size_t work = 0;
  for (int n = std::max(1, 2 * k); n <= n_max; ++n) {
    auto sets = gapped_subsets(n, k + 1, v);
    if (opt.endpoint_reduction)
      std::erase_if(sets, [&](const GappedSet& g) { return g.members.front() != 0 || g.members.back() != n; });
    if (sets.empty()) continue;
    std::vector<std::vector<int>> lower;
    x.for_each_simplex(n - 1, [&](const std::vector<int>& s) { lower.push_back(s); });
    for (const auto& g : sets) {
      const auto& I = g.members;
      int i0 = I[0];
      std::optional<SegalWitness> found;
      auto test = [&](const std::vector<int>& w) {
        if (++work > opt.budget) throw BudgetExceeded("word Segal check budget exceeded");
        if (x.is_simplex(w)) return;
        std::vector<FaceLift> faces;
        for (int i : I) {
          auto f = word_face(x, w, i);
          if (!f || !x.is_simplex(*f)) return;
          faces.push_back({i, *f});
        }
        ++res.families_checked;
        SegalWitness wit;
        wit.n = n;
        wit.I = I;
        wit.word = w;
        wit.faces = std::move(faces);
        wit.reason = "word does not lift";
        found = wit;
      };
      for (const auto& y : lower) {
        if (found) break;
        std::vector<int> w;
        if (i0 == 0 || i0 == n) {
          int anchor = i0 == 0 ? (y.empty() ? -1 : x.src(y.front())) : (y.empty() ? -1 : x.tgt(y.back()));
          for (int e = 0; e < ne && !found; ++e) {
            if (anchor >= 0 && (i0 == 0 ? x.tgt(e) : x.src(e)) != anchor) continue;
            w = y;
            if (i0 == 0) w.insert(w.begin(), e);
            else w.push_back(e);
            test(w);
          }
        } else {
          for (auto [f, h] : split[y[i0 - 1]]) {
            if (found) break;
            w.assign(y.begin(), y.begin() + (i0 - 1));
            w.push_back(f);
            w.push_back(h);
            w.insert(w.end(), y.begin() + i0, y.end());
            test(w);
          }
        }
      }
      if (found) {
        res.pass = false;
        res.witness = found;
        return res;
      }
    }
  }
  return res;
}

bool replay_spiny_witness(const PartialGroupoid& pg, const SegalWitness& w) {
  if (w.word.empty()) return false;
  int a = pg.src(w.word[0]);
  std::vector<int> star = w.word;
  std::sort(star.begin(), star.end());
  if (pg.top_is_simplex(a, star)) return false;
  for (const auto& f : w.faces) {
    if (f.index < 1 || f.index > static_cast<int>(w.word.size())) return false;
    std::vector<int> expect = w.word;
    expect.erase(expect.begin() + (f.index - 1));
    if (expect != f.lift || !pg.top_is_simplex(a, f.lift)) return false;
  }
  return !w.faces.empty();
}

bool replay_word_witness(const EdgySet& x, const SegalWitness& w) {
  if (x.is_simplex(w.word)) return false;
  for (const auto& f : w.faces) {
    auto face = word_face(x, w.word, f.index);
    if (!face || *face != f.lift || !x.is_simplex(*face)) return false;
  }
  return !w.faces.empty();
}

BruteDegree brute_degree(const PartialGroupoid& pg, int n_max, int k_max) {
  BruteDegree out;
  out.n_max = n_max;
  std::optional<SegalWitness> last;
  for (int k = 1; k <= k_max; ++k) {
    auto r = check_lower_segal_spiny(pg, k, n_max);
    if (r.pass) {
      out.degree = k;
      out.witness = last;
      return out;
    }
    last = r.witness;
  }
  throw MathError("brute-force degree exceeds " + std::to_string(k_max));
}

}  // namespace pgd
