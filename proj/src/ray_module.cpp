#include "fanohull/ray_module.hpp"

#include <algorithm>
#include <sstream>

namespace fanohull {

namespace {

constexpr long kMaxFiniteRun = 4096;

Int to_small_guard(const Int& x) {
  if (x > kMaxFiniteRun || x < -kMaxFiniteRun)
    throw std::runtime_error("ray family run exceeds supported size");
  return x;
}

}  // namespace

DegreeLine line_through(const IntVec& base, const IntVec& dir) {
  if (is_zero(dir)) throw std::invalid_argument("ray family with zero direction");
  IntVec d = primitive(dir);
  size_t j = 0;
  while (d[j] == 0) ++j;
  if (d[j] < 0) d = vec_neg(std::move(d));
  size_t pivot = 0;
  while (d[pivot] == 0) ++pivot;
  Int t0 = floor_div(base[pivot], d[pivot]);
  DegreeLine line;
  line.dir = d;
  line.anchor = vec_sub(base, vec_scale(d, t0));
  return line;
}

IntVec DegreeLine::point(const Int& t) const { return vec_add(anchor, vec_scale(dir, t)); }

std::optional<Int> DegreeLine::t_of(const IntVec& m) const {
  size_t pivot = 0;
  while (dir[pivot] == 0) ++pivot;
  Int diff = m[pivot] - anchor[pivot];
  if (diff % dir[pivot] != 0) return std::nullopt;
  Int t = diff / dir[pivot];
  if (point(t) != m) return std::nullopt;
  return t;
}

bool RayFamily::contains(const IntVec& m) const {
  IntVec diff = vec_sub(m, base);
  if (is_zero(diff)) return true;
  size_t pivot = 0;
  while (pivot < dir.size() && dir[pivot] == 0) ++pivot;
  if (pivot == dir.size()) return false;
  if (diff[pivot] % dir[pivot] != 0) return false;
  Int t = diff[pivot] / dir[pivot];
  if (vec_scale(dir, t) != diff) return false;
  return two_sided || t >= 0;
}

int RayFamilyModule::dim_at(const IntVec& m) const {
  int d = 0;
  for (const Sporadic& s : sporadic)
    if (s.degree == m) d += s.dim;
  for (const RayFamily& r : rays)
    if (r.contains(m)) ++d;
  return d;
}

std::optional<Int> RayFamilyModule::total_dim() const {
  if (!rays.empty()) return std::nullopt;
  Int total = 0;
  for (const Sporadic& s : sporadic) total += s.dim;
  return total;
}

std::vector<IntVec> RayFamilyModule::degree_multiset() const {
  if (!rays.empty()) throw std::logic_error("degree_multiset of an infinite module");
  std::vector<IntVec> result;
  for (const Sporadic& s : sporadic)
    for (int i = 0; i < s.dim; ++i) result.push_back(s.degree);
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

namespace {

// Closed t-interval on a degree line; absent bounds are infinite.
struct Seg {
  std::optional<Int> lo, hi;
  int dim = 1;
  std::string label;

  bool covers(const Int& t) const {
    if (lo && t < *lo) return false;
    if (hi && t > *hi) return false;
    return true;
  }
};

struct Piece {
  std::optional<Int> lo, hi;
  int dim = 0;
  std::string label;
};

std::vector<Piece> line_pieces(const std::vector<Seg>& segs) {
  std::vector<Int> ts;
  for (const Seg& s : segs) {
    if (s.lo) ts.push_back(*s.lo);
    if (s.hi) ts.push_back(*s.hi);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto coverage = [&](const Int& t) {
    int d = 0;
    std::string label;
    for (const Seg& s : segs)
      if (s.covers(t)) {
        d += s.dim;
        if (label.empty()) label = s.label;
      }
    return std::make_pair(d, label);
  };

  std::vector<Piece> pieces;
  if (ts.empty()) {
    auto [d, label] = coverage(0);
    if (d > 0) pieces.push_back({std::nullopt, std::nullopt, d, label});
    return pieces;
  }
  auto push = [&](std::optional<Int> lo, std::optional<Int> hi, const Int& sample) {
    auto [d, label] = coverage(sample);
    if (d > 0) pieces.push_back({lo, hi, d, label});
  };
  push(std::nullopt, ts.front() - 1, ts.front() - 1);
  for (size_t i = 0; i < ts.size(); ++i) {
    push(ts[i], ts[i], ts[i]);
    if (i + 1 < ts.size() && ts[i] + 1 <= ts[i + 1] - 1)
      push(ts[i] + 1, ts[i + 1] - 1, ts[i] + 1);
  }
  push(ts.back() + 1, std::nullopt, ts.back() + 1);

  // Merge adjacent runs of equal dimension.
  std::vector<Piece> merged;
  for (const Piece& p : pieces) {
    if (!merged.empty() && merged.back().dim == p.dim && merged.back().hi && p.lo &&
        *merged.back().hi + 1 == *p.lo) {
      merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

}  // namespace

RayFamilyModule RayFamilyModule::normalized() const {
  RayFamilyModule out;
  out.ambient = ambient;

  std::map<DegreeLine, std::vector<Seg>> lines;
  for (const RayFamily& r : rays) {
    DegreeLine line = line_through(r.base, r.dir);
    if (primitive(r.dir) != r.dir)
      throw std::invalid_argument("ray family direction must be primitive");
    auto t = line.t_of(r.base);
    Seg seg;
    seg.dim = 1;
    seg.label = r.label;
    if (!r.two_sided) {
      if (r.dir == line.dir)
        seg.lo = *t;
      else
        seg.hi = *t;
    }
    lines[line].push_back(seg);
  }

  std::map<IntVec, std::pair<int, std::string>> pts;
  auto add_pt = [&](const IntVec& deg, int dim, const std::string& label) {
    auto& slot = pts[deg];
    slot.first += dim;
    if (slot.second.empty()) slot.second = label;
  };

  for (const Sporadic& s : sporadic) {
    bool placed = false;
    for (auto& [line, segs] : lines) {
      auto t = line.t_of(s.degree);
      if (t) {
        segs.push_back({*t, *t, s.dim, s.label});
        placed = true;
        break;
      }
    }
    if (!placed) add_pt(s.degree, s.dim, s.label);
  }

  for (const auto& [line, segs] : lines) {
    for (const Piece& p : line_pieces(segs)) {
      if (p.lo && p.hi) {
        Int len = *p.hi - *p.lo + 1;
        to_small_guard(len);
        for (Int t = *p.lo; t <= *p.hi; ++t) add_pt(line.point(t), p.dim, p.label);
      } else if (p.lo) {
        for (int c = 0; c < p.dim; ++c)
          out.rays.push_back({line.point(*p.lo), line.dir, false, p.label});
      } else if (p.hi) {
        for (int c = 0; c < p.dim; ++c)
          out.rays.push_back({line.point(*p.hi), vec_neg(line.dir), false, p.label});
      } else {
        for (int c = 0; c < p.dim; ++c) out.rays.push_back({line.anchor, line.dir, true, p.label});
      }
    }
  }

  for (const auto& [deg, slot] : pts) out.sporadic.push_back({deg, slot.first, slot.second});
  std::sort(out.sporadic.begin(), out.sporadic.end(),
            [](const Sporadic& a, const Sporadic& b) { return lex_less(a.degree, b.degree); });
  std::sort(out.rays.begin(), out.rays.end(), [](const RayFamily& a, const RayFamily& b) {
    if (a.base != b.base) return lex_less(a.base, b.base);
    if (a.dir != b.dir) return lex_less(a.dir, b.dir);
    return a.two_sided < b.two_sided;
  });
  return out;
}

bool same_support_dims(const RayFamilyModule& a, const RayFamilyModule& b) {
  RayFamilyModule na = a.normalized(), nb = b.normalized();
  if (na.sporadic.size() != nb.sporadic.size() || na.rays.size() != nb.rays.size()) return false;
  for (size_t i = 0; i < na.sporadic.size(); ++i)
    if (na.sporadic[i].degree != nb.sporadic[i].degree || na.sporadic[i].dim != nb.sporadic[i].dim)
      return false;
  for (size_t i = 0; i < na.rays.size(); ++i)
    if (na.rays[i].base != nb.rays[i].base || na.rays[i].dir != nb.rays[i].dir ||
        na.rays[i].two_sided != nb.rays[i].two_sided)
      return false;
  return true;
}

bool GradedLinearMap::linked(const FamilyRef& s, const FamilyRef& t) const {
  for (const auto& [a, b] : links)
    if (a.is_ray == s.is_ray && a.idx == s.idx && b.is_ray == t.is_ray && b.idx == t.idx)
      return true;
  return false;
}

namespace {

struct FamilySupport {
  bool is_point = false;
  IntVec degree;  // point case
  DegreeLine line;
  std::optional<Int> lo, hi;  // t-interval on the line (ray case)

  bool contains(const IntVec& m) const {
    if (is_point) return degree == m;
    auto t = line.t_of(m);
    if (!t) return false;
    if (lo && *t < *lo) return false;
    if (hi && *t > *hi) return false;
    return true;
  }
};

FamilySupport support_of_sporadic(const Sporadic& s) {
  FamilySupport fs;
  fs.is_point = true;
  fs.degree = s.degree;
  return fs;
}

FamilySupport support_of_ray(const RayFamily& r) {
  FamilySupport fs;
  fs.is_point = false;
  fs.line = line_through(r.base, r.dir);
  Int t = *fs.line.t_of(r.base);
  if (!r.two_sided) {
    if (r.dir == fs.line.dir)
      fs.lo = t;
    else
      fs.hi = t;
  }
  return fs;
}

// Integer crossing point of two distinct non-parallel lines, if any.
std::optional<std::pair<Int, Int>> line_crossing(const DegreeLine& a, const DegreeLine& b) {
  if (a.dir == b.dir) return std::nullopt;  // parallel (canonical dirs)
  size_t n = a.dir.size();
  RatMat m(n, 2);
  RatVec rhs(n);
  for (size_t i = 0; i < n; ++i) {
    m.at(i, 0) = Rat(a.dir[i]);
    m.at(i, 1) = Rat(-b.dir[i]);
    rhs[i] = Rat(b.anchor[i] - a.anchor[i]);
  }
  auto sol = solve_unique(m, rhs);
  if (!sol) return std::nullopt;
  // Verify the particular solution solves every equation.
  for (size_t i = 0; i < n; ++i)
    if ((*sol)[0] * Rat(a.dir[i]) - (*sol)[1] * Rat(b.dir[i]) != rhs[i]) return std::nullopt;
  if (den((*sol)[0]) != 1 || den((*sol)[1]) != 1) return std::nullopt;
  return std::make_pair(num((*sol)[0]), num((*sol)[1]));
}

// Some common degree of two family supports, if one exists.
std::optional<IntVec> overlap_witness(const FamilySupport& a, const FamilySupport& b) {
  if (a.is_point) {
    if (b.contains(a.degree)) return a.degree;
    return std::nullopt;
  }
  if (b.is_point) {
    if (a.contains(b.degree)) return b.degree;
    return std::nullopt;
  }
  if (a.line == b.line) {
    std::optional<Int> lo, hi;
    if (a.lo) lo = *a.lo;
    if (b.lo) lo = lo ? std::max(*lo, *b.lo) : *b.lo;
    if (a.hi) hi = *a.hi;
    if (b.hi) hi = hi ? std::min(*hi, *b.hi) : *b.hi;
    if (lo && hi && *lo > *hi) return std::nullopt;
    Int t = lo ? *lo : (hi ? *hi : Int(0));
    return a.line.point(t);
  }
  auto cross = line_crossing(a.line, b.line);
  if (!cross) return std::nullopt;
  IntVec x = a.line.point(cross->first);
  if (a.contains(x) && b.contains(x)) return x;
  return std::nullopt;
}

// True when the (possibly infinite) overlap of two supports meets the
// support of the given module.
bool overlap_meets_module(const FamilySupport& a, const FamilySupport& b,
                          const RayFamilyModule& mod) {
  if (a.is_point || b.is_point) {
    auto w = overlap_witness(a, b);
    return w && mod.dim_at(*w) > 0;
  }
  if (!(a.line == b.line)) {
    auto w = overlap_witness(a, b);
    return w && mod.dim_at(*w) > 0;
  }
  // Shared line: intersect the t-intervals exactly.
  std::optional<Int> lo, hi;
  if (a.lo) lo = *a.lo;
  if (b.lo) lo = lo ? std::max(*lo, *b.lo) : *b.lo;
  if (a.hi) hi = *a.hi;
  if (b.hi) hi = hi ? std::min(*hi, *b.hi) : *b.hi;
  if (lo && hi && *lo > *hi) return false;
  for (const Sporadic& s : mod.sporadic) {
    auto t = a.line.t_of(s.degree);
    if (t && (!lo || *t >= *lo) && (!hi || *t <= *hi)) return true;
  }
  for (const RayFamily& r : mod.rays) {
    FamilySupport rs = support_of_ray(r);
    if (rs.line == a.line) {
      std::optional<Int> l2 = lo, h2 = hi;
      if (rs.lo) l2 = l2 ? std::max(*l2, *rs.lo) : *rs.lo;
      if (rs.hi) h2 = h2 ? std::min(*h2, *rs.hi) : *rs.hi;
      if (!(l2 && h2 && *l2 > *h2)) return true;
    } else {
      auto cross = line_crossing(a.line, rs.line);
      if (!cross) continue;
      Int t = cross->first;
      if ((!lo || t >= *lo) && (!hi || t <= *hi) && rs.contains(a.line.point(t))) return true;
    }
  }
  return false;
}

std::vector<std::pair<FamilyRef, FamilySupport>> family_supports(const RayFamilyModule& m) {
  std::vector<std::pair<FamilyRef, FamilySupport>> out;
  for (size_t i = 0; i < m.sporadic.size(); ++i)
    out.push_back({{false, i}, support_of_sporadic(m.sporadic[i])});
  for (size_t i = 0; i < m.rays.size(); ++i) out.push_back({{true, i}, support_of_ray(m.rays[i])});
  return out;
}

}  // namespace

GradedLinearMap restriction(const RayFamilyModule& source, const RayFamilyModule& target) {
  auto src = family_supports(source);
  auto tgt = family_supports(target);

  // Target must have multiplicity at most one in every degree.
  for (const Sporadic& s : target.sporadic)
    if (s.dim > 1)
      throw std::runtime_error("unsupported configuration: target multiplicity exceeds 1");
  for (size_t i = 0; i < tgt.size(); ++i)
    for (size_t j = i + 1; j < tgt.size(); ++j)
      if (overlap_witness(tgt[i].second, tgt[j].second))
        throw std::runtime_error("unsupported configuration: target multiplicity exceeds 1");

  // Source multiplicity must be at most one wherever the target lives.
  for (const Sporadic& s : source.sporadic)
    if (s.dim > 1 && target.dim_at(s.degree) > 0)
      throw std::runtime_error("unsupported configuration: ambiguous source matching");
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = i + 1; j < src.size(); ++j)
      if (overlap_meets_module(src[i].second, src[j].second, target))
        throw std::runtime_error("unsupported configuration: ambiguous source matching");

  GradedLinearMap gm;
  for (const auto& [sref, ssup] : src)
    for (const auto& [tref, tsup] : tgt)
      if (overlap_witness(ssup, tsup)) gm.links.push_back({sref, tref});
  return gm;
}

namespace {

struct Elt {
  size_t module_idx;
  FamilyRef fam;
  int copy;
};

std::vector<Elt> elements_at(const std::vector<const RayFamilyModule*>& mods, const IntVec& m) {
  std::vector<Elt> out;
  for (size_t mi = 0; mi < mods.size(); ++mi) {
    const RayFamilyModule& mod = *mods[mi];
    for (size_t i = 0; i < mod.sporadic.size(); ++i)
      if (mod.sporadic[i].degree == m)
        for (int c = 0; c < mod.sporadic[i].dim; ++c) out.push_back({mi, {false, i}, c});
    for (size_t i = 0; i < mod.rays.size(); ++i)
      if (mod.rays[i].contains(m)) out.push_back({mi, {true, i}, 0});
  }
  return out;
}

}  // namespace

CechResult cech_h0_h1(const CechData& data) {
  std::vector<const RayFamilyModule*> chart_mods, int_mods;
  for (const auto& [id, m] : data.charts) chart_mods.push_back(&m);
  for (const auto& [i, j, m] : data.intersections) int_mods.push_back(&m);

  std::vector<const RayFamilyModule*> all_mods = chart_mods;
  all_mods.insert(all_mods.end(), int_mods.begin(), int_mods.end());

  // Lines carried by any ray family of the cover.
  std::set<DegreeLine> lines;
  for (const RayFamilyModule* m : all_mods)
    for (const RayFamily& r : m->rays) lines.insert(line_through(r.base, r.dir));

  // Exceptional degrees: sporadic degrees, one-sided ray endpoints,
  // pairwise line crossings.
  std::set<IntVec> exceptional_degs;
  for (const RayFamilyModule* m : all_mods) {
    for (const Sporadic& s : m->sporadic) exceptional_degs.insert(s.degree);
    for (const RayFamily& r : m->rays)
      if (!r.two_sided) exceptional_degs.insert(r.base);
  }
  for (auto it = lines.begin(); it != lines.end(); ++it)
    for (auto jt = std::next(it); jt != lines.end(); ++jt) {
      auto cross = line_crossing(*it, *jt);
      if (cross) exceptional_degs.insert(it->point(cross->first));
    }

  CechResult res;
  res.h0.ambient = data.ambient;
  res.h1.ambient = data.ambient;

  auto matrix_data = [&](const IntVec& m) {
    std::vector<Elt> cols = elements_at(chart_mods, m);
    std::vector<Elt> rows = elements_at(int_mods, m);
    RatMat mat(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      size_t t_idx = rows[r].module_idx;
      const auto& [ci, cj, mod] = data.intersections[t_idx];
      (void)mod;
      for (size_t c = 0; c < cols.size(); ++c) {
        size_t chart = cols[c].module_idx;
        int sign = 0;
        if (chart == cj)
          sign = 1;
        else if (chart == ci)
          sign = -1;
        else
          continue;
        auto it = data.restrictions.find({chart, t_idx});
        if (it == data.restrictions.end()) continue;
        if (it->second.linked(cols[c].fam, rows[r].fam)) {
          if (cols[c].copy > 0)
            throw std::runtime_error("unsupported configuration: ambiguous source matching");
          mat.at(r, c) = sign;
        }
      }
    }
    size_t rank = mat.rank();
    return std::make_tuple(cols.size(), rows.size(), rank);
  };

  auto record_class = [&](const std::string& desc, const IntVec& rep, bool finite,
                          size_t run_dim_h0_copies, const DegreeLine* line,
                          const std::optional<Int>& lo, const std::optional<Int>& hi) {
    auto [c0, c1, rank] = matrix_data(rep);
    size_t h0 = c0 - rank, h1 = c1 - rank;
    if (!((c0 >= rank) && (c1 >= rank))) throw std::logic_error("rank exceeds dimensions");
    // Per-degree Euler characteristic identity, by rank-nullity.
    if (static_cast<long long>(c0) - static_cast<long long>(c1) !=
        static_cast<long long>(h0) - static_cast<long long>(h1))
      throw std::logic_error("Euler characteristic identity violated");
    CechClass cls;
    cls.description = desc;
    cls.representative = rep;
    cls.c0 = c0;
    cls.c1 = c1;
    cls.h0 = h0;
    cls.h1 = h1;
    cls.finite_class = finite;
    if (!cls.bijective()) res.exceptional.push_back(res.classes.size());
    res.classes.push_back(cls);

    auto emit = [&](RayFamilyModule& out, size_t dim) {
      if (dim == 0) return;
      if (!line) {
        out.sporadic.push_back({rep, static_cast<int>(dim), desc});
        return;
      }
      if (lo && hi) {
        to_small_guard(*hi - *lo + 1);
        for (Int t = *lo; t <= *hi; ++t)
          out.sporadic.push_back({line->point(t), static_cast<int>(dim), desc});
      } else if (lo) {
        for (size_t c = 0; c < dim; ++c) out.rays.push_back({line->point(*lo), line->dir, false, desc});
      } else if (hi) {
        for (size_t c = 0; c < dim; ++c)
          out.rays.push_back({line->point(*hi), vec_neg(line->dir), false, desc});
      } else {
        for (size_t c = 0; c < dim; ++c) out.rays.push_back({line->anchor, line->dir, true, desc});
      }
    };
    emit(res.h0, h0);
    emit(res.h1, h1);
    (void)run_dim_h0_copies;
  };

  for (const IntVec& e : exceptional_degs)
    record_class("degree " + to_string(e), e, true, 0, nullptr, std::nullopt, std::nullopt);

  for (const DegreeLine& line : lines) {
    std::vector<Int> ts;
    for (const IntVec& e : exceptional_degs) {
      auto t = line.t_of(e);
      if (t) ts.push_back(*t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::string lid = "line dir " + to_string(line.dir) + " anchor " + to_string(line.anchor);
    if (ts.empty()) {
      record_class(lid + " all t", line.anchor, false, 0, &line, std::nullopt, std::nullopt);
      continue;
    }
    record_class(lid + " t<=" + (ts.front() - 1).str(), line.point(ts.front() - 1), false, 0, &line,
                 std::nullopt, ts.front() - 1);
    for (size_t i = 0; i + 1 < ts.size(); ++i)
      if (ts[i] + 1 <= ts[i + 1] - 1)
        record_class(lid + " t in [" + (ts[i] + 1).str() + "," + (ts[i + 1] - 1).str() + "]",
                     line.point(ts[i] + 1), true, 0, &line, ts[i] + 1, ts[i + 1] - 1);
    record_class(lid + " t>=" + (ts.back() + 1).str(), line.point(ts.back() + 1), false, 0, &line,
                 ts.back() + 1, std::nullopt);
  }

  res.h0 = res.h0.normalized();
  res.h1 = res.h1.normalized();
  return res;
}

void canonical_weight_sort(std::vector<IntVec>& weights) {
  auto key = [](const IntVec& w) {
    if (is_zero(w)) return std::make_pair(IntVec(w.size(), Int(0)), Int(0));
    return std::make_pair(primitive(w), content(w));
  };
  std::sort(weights.begin(), weights.end(), [&](const IntVec& a, const IntVec& b) {
    auto ka = key(a), kb = key(b);
    if (ka.first != kb.first) return lex_less(ka.first, kb.first);
    return ka.second < kb.second;
  });
}

}  // namespace fanohull
