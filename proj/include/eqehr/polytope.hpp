#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "eqehr/lattice.hpp"
#include "eqehr/linalg.hpp"

namespace eqehr {

/// Closed halfspace normal . x <= offset with a primitive integer normal.
struct Halfspace {
    IVec normal;
    Rat offset;

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

namespace detail {

inline long long checked_ll(const Int& v) {
    static const Int lim = Int(1) << 62;
    if (v >= lim || v <= -lim) throw std::overflow_error("lattice enumeration value too large");
    return v.convert_to<long long>();
}

inline long long floordiv_ll(long long n, long long d) {
    long long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}
inline long long ceildiv_ll(long long n, long long d) { return -floordiv_ll(-n, d); }

/// One integerized constraint system bounding coordinate z_k of the
/// enumeration: own * z_k <= beta - sum_{i<k} pre[i][c] z_i.
struct LevelSystem {
    std::size_t nc = 0;
    std::vector<long long> own;   ///< coefficient of z_level, per constraint
    std::vector<long long> beta;
    std::vector<long long> pre;   ///< pre[i*nc + c] for i < level
};

/// Exact count of integer points in {z : a.z <= b} within the box [lo, hi]
/// by prefix-fixing. Levels with a projection system get exact intervals
/// (only productive prefixes are visited); levels without one fall back to
/// facet bounds slackened by the exact suffix minimum over the polytope.
/// The innermost coordinate is counted as a whole interval.
class BoxCounter {
public:
    /// `systems[k]` bounds z_k; entries with nc == 0 use the fallback.
    /// `systems[dim-1]` must be the full facet system (its bound is exact).
    /// `sufmin[k*nf + j]` lower-bounds the facet suffix sum_{i>=k} a_j z_i
    /// over feasible z, with sufmin[dim*nf + j] = 0.
    BoxCounter(std::vector<LevelSystem> systems, std::vector<long long> lo,
               std::vector<long long> hi, std::vector<long long> sufmin)
        : sys_(std::move(systems)), lo_(std::move(lo)), hi_(std::move(hi)) {
        dim_ = lo_.size();
        nf_ = sys_[dim_ - 1].nc;
        fac_slack_.assign(dim_ * nf_, 0);
        const auto& fac = sys_[dim_ - 1];
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t j = 0; j < nf_; ++j)
                fac_slack_[k * nf_ + j] = fac.beta[j] - sufmin[(k + 1) * nf_ + j];
        partial_.resize(dim_);
        for (std::size_t k = 0; k < dim_; ++k) partial_[k].assign(sys_[k].nc, 0);
    }

    unsigned long long count() {
        if (dim_ == 0) return 1;
        total_ = 0;
        walk(0);
        return total_;
    }

    /// Visits points instead of counting; cb returns false to stop early.
    template <typename Cb>
    void visit(Cb&& cb) {
        if (dim_ == 0) {
            cb(std::vector<long long>{});
            return;
        }
        point_.assign(dim_, 0);
        visit_walk(0, cb);
    }

private:
    std::vector<LevelSystem> sys_;
    std::vector<long long> lo_, hi_;
    std::size_t dim_ = 0, nf_ = 0;
    std::vector<long long> fac_slack_;           ///< beta_j - suffix minimum below level
    std::vector<std::vector<long long>> partial_;  ///< per system, per constraint
    std::vector<long long> point_;
    unsigned long long total_ = 0;
    bool stop_ = false;

    static bool shrink(long long c, long long rem, long long& L, long long& U) {
        if (c == 1) {
            if (rem < U) U = rem;
        } else if (c == -1) {
            if (-rem > L) L = -rem;
        } else if (c > 0) {
            long long q = floordiv_ll(rem, c);
            if (q < U) U = q;
        } else if (c < 0) {
            long long q = ceildiv_ll(rem, c);
            if (q > L) L = q;
        } else if (rem < 0) {
            return false;
        }
        return L <= U;
    }

    bool level_bounds(std::size_t level, long long& L, long long& U) const {
        L = lo_[level];
        U = hi_[level];
        const LevelSystem& s = sys_[level];
        if (s.nc != 0) {
            const long long* p = partial_[level].data();
            for (std::size_t c = 0; c < s.nc; ++c)
                if (!shrink(s.own[c], s.beta[c] - p[c], L, U)) return false;
            return true;
        }
        // fallback: facet system with polytope suffix minima folded in
        const LevelSystem& fac = sys_[dim_ - 1];
        const long long* a = fac.pre.data() + level * nf_;
        const long long* sl = fac_slack_.data() + level * nf_;
        const long long* p = partial_[dim_ - 1].data();
        for (std::size_t j = 0; j < nf_; ++j)
            if (!shrink(a[j], sl[j] - p[j], L, U)) return false;
        return true;
    }

    /// Adds `steps * coefficient-at-level` to the partial sums of every
    /// system that still lies below this level.
    void advance(std::size_t level, long long steps) {
        for (std::size_t k = level + 1; k < dim_; ++k) {
            const LevelSystem& s = sys_[k];
            if (s.nc == 0) continue;
            const long long* c = s.pre.data() + level * s.nc;
            long long* p = partial_[k].data();
            if (steps == 1)
                for (std::size_t i = 0; i < s.nc; ++i) p[i] += c[i];
            else
                for (std::size_t i = 0; i < s.nc; ++i) p[i] += c[i] * steps;
        }
    }

    void walk(std::size_t level) {
        long long L, U;
        if (!level_bounds(level, L, U)) return;
        if (level + 1 == dim_) {
            total_ += static_cast<unsigned long long>(U - L + 1);
            return;
        }
        advance(level, L);
        for (long long z = L; z <= U; ++z) {
            walk(level + 1);
            if (z < U) advance(level, 1);
        }
        advance(level, -U);
    }

    template <typename Cb>
    void visit_walk(std::size_t level, Cb&& cb) {
        if (stop_) return;
        long long L, U;
        if (!level_bounds(level, L, U)) return;
        advance(level, L);
        for (long long z = L; z <= U && !stop_; ++z) {
            point_[level] = z;
            if (level + 1 == dim_) {
                if (!cb(point_)) stop_ = true;
            } else {
                visit_walk(level + 1, cb);
            }
            if (z < U && !stop_) advance(level, 1);
        }
        advance(level, -(stop_ ? point_[level] : U));
    }
};

}  // namespace detail

/// A rational convex polytope in V-representation with an irredundant vertex
/// list. The facet description, affine dimension and the full-dimensional
/// counting frame are computed lazily and shared between copies.
class RationalPolytope {
public:
    RationalPolytope() : ambient_(0), cache_(std::make_shared<Cache>()) {}

    /// Hull of a point set; redundant points are removed exactly.
    static RationalPolytope from_points(std::size_t ambient, std::vector<QVec> pts) {
        for (const auto& p : pts)
            if (p.size() != ambient) throw std::invalid_argument("point dimension mismatch");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<QVec> verts;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<QVec> others;
            others.reserve(pts.size() - 1);
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) others.push_back(pts[j]);
            if (!in_convex_hull(others, pts[i])) verts.push_back(pts[i]);
        }
        return RationalPolytope(ambient, std::move(verts));
    }

    /// Constructor for inputs already known to be irredundant (images of
    /// vertex sets under injective affine maps, dilates, trusted files).
    static RationalPolytope from_vertices_trusted(std::size_t ambient, std::vector<QVec> verts) {
        return RationalPolytope(ambient, std::move(verts));
    }

    static RationalPolytope empty_polytope(std::size_t ambient) {
        return RationalPolytope(ambient, {});
    }

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<QVec>& vertices() const { return verts_; }
    bool is_empty() const { return verts_.empty(); }

    /// Rank of the vertex differences; -1 for the empty polytope.
    long affine_dim() const {
        std::call_once(cache_->dim_once, [&] {
            if (verts_.empty()) {
                cache_->affine_dim = -1;
                return;
            }
            QMat d(verts_.size() - 1, ambient_);
            for (std::size_t i = 1; i < verts_.size(); ++i)
                for (std::size_t j = 0; j < ambient_; ++j)
                    d(i - 1, j) = verts_[i][j] - verts_[0][j];
            cache_->affine_dim = static_cast<long>(rank(std::move(d)));
        });
        return cache_->affine_dim;
    }

    /// Irredundant facet list; requires a full-dimensional polytope.
    const std::vector<Halfspace>& halfspaces() const {
        if (affine_dim() != static_cast<long>(ambient_))
            throw std::invalid_argument(
                "facet enumeration needs a full-dimensional polytope; "
                "re-coordinatize lower-dimensional input first");
        return frame().halfspaces;
    }

    /// Exact membership in any dimension.
    bool contains(const QVec& x) const {
        if (verts_.empty()) return false;
        const Frame& fr = frame();
        for (std::size_t i = 0; i < fr.eq.rows(); ++i) {
            Rat dot = 0;
            for (std::size_t j = 0; j < ambient_; ++j) dot += Rat(fr.eq(i, j)) * x[j];
            if (dot != fr.eq_rhs[i]) return false;
        }
        if (fr.dim == 0) return x == verts_[0];
        QVec rel(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) rel[j] = x[j] - fr.origin[j];
        auto c = solve_linear(fr.basis_t, rel);
        if (!c) return false;
        for (const auto& h : fr.halfspaces) {
            Rat dot = 0;
            for (std::size_t j = 0; j < c->size(); ++j) dot += Rat(h.normal[j]) * (*c)[j];
            if (dot > h.offset) return false;
        }
        return true;
    }

    /// Number of lattice points of the m-th dilate, |mP intersect Z^n|.
    /// Conventions: m = 0 counts the origin (1); the empty polytope counts 1
    /// at m = 0 and 0 afterwards, so its point series is the constant 1.
    Int lattice_point_count(long m) const {
        if (m < 0) throw std::invalid_argument("negative dilate");
        if (m == 0) return 1;
        if (verts_.empty()) return 0;
        const Frame& fr = frame();
        if (fr.dim == 0) {
            for (const auto& v : verts_[0])
                if (!is_integer(Rat(m) * v)) return 0;
            return 1;
        }
        auto setup = dilate_setup(fr, m);
        if (!setup) return 0;
        detail::BoxCounter counter(std::move(setup->levels), std::move(setup->lo),
                                   std::move(setup->hi), std::move(setup->sufmin));
        return Int(counter.count());
    }

    /// All lattice points of the m-th dilate (small instances only).
    std::vector<IVec> lattice_points(long m) const {
        std::vector<IVec> out;
        if (m < 0) throw std::invalid_argument("negative dilate");
        if (m == 0) {
            out.push_back(IVec(ambient_, Int(0)));
            return out;
        }
        if (verts_.empty()) return out;
        const Frame& fr = frame();
        if (fr.dim == 0) {
            IVec p(ambient_);
            bool ok = true;
            for (std::size_t j = 0; j < ambient_; ++j) {
                Rat v = Rat(m) * verts_[0][j];
                if (!is_integer(v)) ok = false;
                else p[j] = numerator(v);
            }
            if (ok) out.push_back(std::move(p));
            return out;
        }
        auto setup = dilate_setup(fr, m);
        if (!setup) return out;
        detail::BoxCounter counter(setup->levels, setup->lo, setup->hi, setup->sufmin);
        counter.visit([&](const std::vector<long long>& z) {
            out.push_back(reconstruct_point(fr, *setup, z));
            return true;
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Lexicographically first lattice point of P itself, if any.
    std::optional<IVec> first_lattice_point() const {
        if (verts_.empty()) return std::nullopt;
        const Frame& fr = frame();
        if (fr.dim == 0) {
            IVec p(ambient_);
            for (std::size_t j = 0; j < ambient_; ++j) {
                if (!is_integer(verts_[0][j])) return std::nullopt;
                p[j] = numerator(verts_[0][j]);
            }
            return p;
        }
        auto setup = dilate_setup(fr, 1);
        if (!setup) return std::nullopt;
        std::optional<IVec> found;
        detail::BoxCounter counter(setup->levels, setup->lo, setup->hi, setup->sufmin);
        counter.visit([&](const std::vector<long long>& z) {
            found = reconstruct_point(fr, *setup, z);
            return false;
        });
        return found;
    }

    /// Smallest positive integer N with N*P a lattice polytope: the lcm of
    /// all vertex coordinate denominators.
    Int denominator() const {
        Int n = 1;
        for (const auto& v : verts_)
            for (const auto& x : v) n = lcm_int(n, denom_of(x));
        return n;
    }

    RationalPolytope dilate(const Rat& s) const {
        if (s < 0) throw std::invalid_argument("negative dilation factor");
        if (s == 0)
            return from_vertices_trusted(ambient_, {QVec(ambient_, Rat(0))});
        std::vector<QVec> v = verts_;
        for (auto& p : v)
            for (auto& x : p) x *= s;
        return from_vertices_trusted(ambient_, std::move(v));
    }

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        if (a.ambient_ != b.ambient_) return false;
        auto va = a.verts_, vb = b.verts_;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        return va == vb;
    }

private:
    std::size_t ambient_;
    std::vector<QVec> verts_;

    struct Frame {
        std::size_t dim = 0;   ///< affine dimension = rank of the direction lattice
        IMat eq;               ///< affine hull equations eq . x = eq_rhs
        QVec eq_rhs;
        IMat basis;            ///< rows: saturated direction lattice of aff(P)
        QMat basis_t;          ///< basis transposed, rational (for solves)
        QVec origin;           ///< a rational point of aff(P) (first vertex)
        std::vector<Halfspace> halfspaces;  ///< facets of Q1 = {c : origin + c.basis in P}
        std::vector<QVec> rverts;           ///< vertices of Q1
        QVec lo, hi;           ///< coordinate bounds of Q1's vertices
        /// Fourier-Motzkin cascade: level_systems[k] describes the projection
        /// of Q1 onto the first k+1 coordinates (coefficients beyond k are
        /// zero), so prefix enumeration gets exact per-level intervals. The
        /// last entry is the facet list itself.
        std::vector<std::vector<Halfspace>> level_systems;
    };

    struct Cache {
        std::once_flag dim_once, frame_once;
        long affine_dim = -1;
        Frame frame;
    };
    std::shared_ptr<Cache> cache_;

    RationalPolytope(std::size_t ambient, std::vector<QVec> verts)
        : ambient_(ambient), verts_(std::move(verts)), cache_(std::make_shared<Cache>()) {
        std::sort(verts_.begin(), verts_.end());
    }

    static IVec primitive_integer(const QVec& v) {
        Int l = 1;
        for (const auto& x : v) l = lcm_int(l, denom_of(x));
        IVec out(v.size());
        Int g = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] = numerator(v[i] * Rat(l));
            g = gcd_int(g, out[i]);
        }
        if (g > 1)
            for (auto& x : out) x /= g;
        return out;
    }

    static std::vector<Halfspace> facet_enumeration(const std::vector<QVec>& verts,
                                                    std::size_t dim) {
        std::set<Halfspace> found;
        std::vector<std::size_t> idx(dim);
        for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
        const std::size_t nv = verts.size();
        if (nv < dim) throw std::invalid_argument("too few vertices for full dimension");
        while (true) {
            // hyperplane through the chosen d vertices, when unique
            QMat diff(dim - 1, dim);
            for (std::size_t i = 1; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    diff(i - 1, j) = verts[idx[i]][j] - verts[idx[0]][j];
            auto ns = nullspace(std::move(diff));
            if (ns.size() == 1) {
                IVec normal = primitive_integer(ns[0]);
                Rat offset = 0;
                for (std::size_t j = 0; j < dim; ++j)
                    offset += Rat(normal[j]) * verts[idx[0]][j];
                int sign = 0;
                bool supporting = true;
                for (const auto& v : verts) {
                    Rat dot = 0;
                    for (std::size_t j = 0; j < dim; ++j) dot += Rat(normal[j]) * v[j];
                    if (dot == offset) continue;
                    int s = dot < offset ? -1 : 1;
                    if (sign == 0) sign = s;
                    else if (sign != s) { supporting = false; break; }
                }
                if (supporting && sign != 0) {
                    if (sign > 0) {
                        for (auto& x : normal) x = -x;
                        offset = -offset;
                    }
                    found.insert(Halfspace{std::move(normal), std::move(offset)});
                }
            }
            // next combination
            std::size_t k = dim;
            while (k-- > 0) {
                if (idx[k] + (dim - k) < nv) {
                    ++idx[k];
                    for (std::size_t j = k + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (k == 0) return std::vector<Halfspace>(found.begin(), found.end());
            }
        }
    }

    const Frame& frame() const {
        std::call_once(cache_->frame_once, [&] { build_frame(); });
        return cache_->frame;
    }

    void build_frame() const {
        Frame fr;
        fr.origin = verts_[0];
        // affine hull equations: integer kernel directions vs normals
        QMat d(verts_.size() - 1, ambient_);
        for (std::size_t i = 1; i < verts_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j)
                d(i - 1, j) = verts_[i][j] - verts_[0][j];
        auto normals = nullspace(std::move(d));  // normals of aff(P)
        IMat eq(normals.size(), ambient_);
        QVec rhs(normals.size());
        for (std::size_t i = 0; i < normals.size(); ++i) {
            IVec n = primitive_integer(normals[i]);
            Rat b = 0;
            for (std::size_t j = 0; j < ambient_; ++j) {
                eq(i, j) = n[j];
                b += Rat(n[j]) * verts_[0][j];
            }
            rhs[i] = b;
        }
        fr.eq = std::move(eq);
        fr.eq_rhs = std::move(rhs);
        fr.dim = ambient_ - normals.size();
        if (fr.dim == 0) {
            cache_->frame = std::move(fr);
            return;
        }

        std::vector<QVec> rverts;
        if (fr.eq.rows() == 0) {
            // full-dimensional: identity frame, coordinates are the vertices
            fr.origin.assign(ambient_, Rat(0));
            fr.basis = IMat::identity(ambient_);
            fr.basis_t = to_qmat(fr.basis);
            rverts = verts_;
        } else {
            fr.basis = integer_kernel(fr.eq);
            if (fr.basis.rows() != fr.dim)
                throw std::logic_error("direction lattice rank mismatch");
            fr.basis_t = to_qmat(fr.basis.transpose());
            rverts.reserve(verts_.size());
            for (const auto& v : verts_) {
                QVec rel(ambient_);
                for (std::size_t j = 0; j < ambient_; ++j) rel[j] = v[j] - fr.origin[j];
                auto c = solve_linear(fr.basis_t, rel);
                if (!c) throw std::logic_error("vertex outside its own affine hull");
                rverts.push_back(std::move(*c));
            }
        }
        fr.lo.assign(fr.dim, Rat(0));
        fr.hi.assign(fr.dim, Rat(0));
        for (std::size_t j = 0; j < fr.dim; ++j) {
            fr.lo[j] = fr.hi[j] = rverts[0][j];
            for (const auto& c : rverts) {
                fr.lo[j] = std::min(fr.lo[j], c[j]);
                fr.hi[j] = std::max(fr.hi[j], c[j]);
            }
        }
        fr.halfspaces = facet_enumeration(rverts, fr.dim);
        fr.rverts = std::move(rverts);
        fr.level_systems = projection_cascade(fr.halfspaces, fr.rverts, fr.dim);
        cache_->frame = std::move(fr);
    }

    /// Eliminates the trailing coordinates one by one. Every combination a
    /// Fourier-Motzkin step produces is valid for the projection; only rows
    /// that are tight at a projected vertex can be facets, so the rest are
    /// dropped, which keeps the cascade small. If a level still explodes the
    /// cascade stops and enumeration falls back to suffix-minimum bounds for
    /// the untouched levels.
    static std::vector<std::vector<Halfspace>> projection_cascade(
        const std::vector<Halfspace>& facets, const std::vector<QVec>& verts, std::size_t dim) {
        std::vector<std::vector<Halfspace>> systems(dim);
        systems[dim - 1] = facets;
        const std::size_t cap = 64 * facets.size() + 256;
        for (std::size_t k = dim - 1; k > 0; --k) {
            const auto& cur = systems[k];
            if (cur.empty()) break;  // cascade stopped earlier
            // tightest offset per primitive normal, support check afterwards
            std::map<IVec, Rat> candidates;
            auto consider = [&](IVec normal, Rat offset) {
                Int g = 0;
                bool zero = true;
                for (const auto& c : normal) {
                    g = gcd_int(g, c);
                    if (c != 0) zero = false;
                }
                if (zero) return;
                if (g > 1) {
                    for (auto& c : normal) c /= g;
                    offset /= Rat(g);
                }
                auto [it, fresh] = candidates.emplace(std::move(normal), offset);
                if (!fresh && offset < it->second) it->second = std::move(offset);
            };
            for (const auto& h : cur)
                if (h.normal[k] == 0) consider(h.normal, h.offset);
            for (const auto& hp : cur) {
                if (hp.normal[k] <= 0) continue;
                for (const auto& hn : cur) {
                    if (hn.normal[k] >= 0) continue;
                    Int p = hp.normal[k], q = -hn.normal[k];
                    IVec normal(dim, Int(0));
                    for (std::size_t i = 0; i < k; ++i)
                        normal[i] = q * hp.normal[i] + p * hn.normal[i];
                    consider(std::move(normal), Rat(q) * hp.offset + Rat(p) * hn.offset);
                    if (candidates.size() > 4 * cap) break;
                }
                if (candidates.size() > 4 * cap) break;
            }
            std::vector<Halfspace> next;
            for (auto& [normal, offset] : candidates) {
                Rat best;
                bool first = true;
                for (const auto& v : verts) {
                    Rat dot = 0;
                    for (std::size_t i = 0; i < k; ++i)
                        if (normal[i] != 0) dot += Rat(normal[i]) * v[i];
                    if (first || dot > best) best = dot;
                    first = false;
                }
                if (best == offset) next.push_back(Halfspace{normal, offset});
            }
            if (next.size() > cap || next.empty() || candidates.size() > 4 * cap) {
                // give up below this level; leave the remaining systems empty
                for (std::size_t j = 0; j < k; ++j) systems[j].clear();
                break;
            }
            systems[k - 1] = std::move(next);
        }
        return systems;
    }

    struct DilateSetup {
        std::vector<detail::LevelSystem> levels;  ///< per-level bounding systems
        std::vector<long long> lo, hi;
        std::vector<long long> sufmin;  ///< facet suffix minima over the polytope
        IVec anchor;  ///< integer point of aff(mP); lattice points are anchor + z.basis
        QVec c0;      ///< basis coordinates of (anchor - m*origin)
    };

    /// Integerized constraint systems for the m-th dilate, or nullopt when
    /// the affine hull of mP carries no lattice points.
    std::optional<DilateSetup> dilate_setup(const Frame& fr, long m) const {
        DilateSetup s;
        // integer anchor on aff(mP)
        IVec rhs(fr.eq.rows());
        for (std::size_t i = 0; i < fr.eq.rows(); ++i) {
            Rat v = Rat(m) * fr.eq_rhs[i];
            if (!is_integer(v)) return std::nullopt;
            rhs[i] = numerator(v);
        }
        if (fr.eq.rows() == 0) {
            s.anchor.assign(ambient_, Int(0));
        } else {
            auto sol = solve_integer(fr.eq, rhs);
            if (!sol) return std::nullopt;
            s.anchor = std::move(*sol);
        }
        // c0 = coordinates of anchor - m*origin in the direction basis
        QVec rel(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) rel[j] = Rat(s.anchor[j]) - Rat(m) * fr.origin[j];
        auto c0 = solve_linear(fr.basis_t, rel);
        if (!c0) throw std::logic_error("anchor outside direction space");
        s.c0 = std::move(*c0);

        s.lo.resize(fr.dim);
        s.hi.resize(fr.dim);
        bool box_empty = false;
        for (std::size_t j = 0; j < fr.dim; ++j) {
            s.lo[j] = detail::checked_ll(ceil_rat(Rat(m) * fr.lo[j] - s.c0[j]));
            s.hi[j] = detail::checked_ll(floor_rat(Rat(m) * fr.hi[j] - s.c0[j]));
            if (s.lo[j] > s.hi[j]) box_empty = true;
        }
        if (box_empty) {
            s.lo.assign(fr.dim, 0);
            s.hi.assign(fr.dim, 0);
            s.levels.resize(fr.dim);
            auto& fac = s.levels[fr.dim - 1];
            fac.nc = 1;
            fac.own.assign(1, 0);
            fac.beta.assign(1, -1);  // 0 <= -1: infeasible
            fac.pre.assign((fr.dim - 1), 0);
            s.sufmin.assign((fr.dim + 1), 0);
            return s;
        }

        // integerize each level's system; a.z <= m*offset - a.c0 and integer
        // z makes a.z an integer, so flooring the bound is exact
        s.levels.resize(fr.dim);
        for (std::size_t k = 0; k < fr.dim; ++k) {
            const auto& src = fr.level_systems[k];
            auto& dst = s.levels[k];
            dst.nc = src.size();
            if (dst.nc == 0) continue;
            dst.own.resize(dst.nc);
            dst.beta.resize(dst.nc);
            dst.pre.assign(k * dst.nc, 0);
            for (std::size_t c = 0; c < dst.nc; ++c) {
                const Halfspace& h = src[c];
                Rat bound = Rat(m) * h.offset;
                for (std::size_t i = 0; i <= k; ++i) bound -= Rat(h.normal[i]) * s.c0[i];
                dst.beta[c] = detail::checked_ll(floor_rat(bound));
                dst.own[c] = detail::checked_ll(h.normal[k]);
                for (std::size_t i = 0; i < k; ++i)
                    dst.pre[i * dst.nc + c] = detail::checked_ll(h.normal[i]);
            }
        }
        // exact suffix minima of each facet over the shifted dilate, linear
        // over the polytope so attained at a vertex (fallback levels only)
        const std::size_t nf = fr.halfspaces.size();
        s.sufmin.assign((fr.dim + 1) * nf, 0);
        bool need_fallback = false;
        for (std::size_t k = 0; k + 1 < fr.dim; ++k)
            if (fr.level_systems[k].empty()) need_fallback = true;
        if (need_fallback) {
            for (std::size_t j = 0; j < nf; ++j) {
                const Halfspace& h = fr.halfspaces[j];
                QVec best(fr.dim + 1);
                bool first = true;
                for (const auto& v : fr.rverts) {
                    QVec suf(fr.dim + 1, Rat(0));
                    for (std::size_t k = fr.dim; k-- > 0;)
                        suf[k] = suf[k + 1] + Rat(h.normal[k]) * (Rat(m) * v[k] - s.c0[k]);
                    if (first) {
                        best = suf;
                        first = false;
                    } else {
                        for (std::size_t k = 0; k <= fr.dim; ++k)
                            best[k] = std::min(best[k], suf[k]);
                    }
                }
                for (std::size_t k = 0; k <= fr.dim; ++k)
                    s.sufmin[k * nf + j] = detail::checked_ll(floor_rat(best[k]));
            }
        }
        return s;
    }

    IVec reconstruct_point(const Frame& fr, const DilateSetup& s,
                           const std::vector<long long>& z) const {
        IVec x = s.anchor;
        for (std::size_t i = 0; i < fr.dim; ++i)
            for (std::size_t j = 0; j < ambient_; ++j) x[j] += Int(z[i]) * fr.basis(i, j);
        return x;
    }
};

// Spec-facing free functions -------------------------------------------------

inline const std::vector<Halfspace>& hull_halfspaces(const RationalPolytope& p) {
    return p.halfspaces();
}

inline Int lattice_point_count(const RationalPolytope& p, long m) {
    return p.lattice_point_count(m);
}

inline Int denominator(const RationalPolytope& p) { return p.denominator(); }

/// Re-coordinatize P inside the sublattice L: the result lives in Z^rank(L)
/// and its lattice points at every dilate biject with the points of the
/// dilate of P that lie in L.
inline RationalPolytope restrict_to_sublattice(const RationalPolytope& p, const Sublattice& l) {
    std::vector<QVec> coords;
    coords.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        auto c = l.coordinates(v);
        if (!c) throw std::invalid_argument("vertex outside the rational span of the sublattice");
        coords.push_back(std::move(*c));
    }
    return RationalPolytope::from_vertices_trusted(l.rank(), std::move(coords));
}

/// Free sum: Conv(A x {0} union {0} x B). Both summands must contain the
/// origin.
inline RationalPolytope free_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (!a.contains(QVec(a.ambient_dim(), Rat(0))) || !b.contains(QVec(b.ambient_dim(), Rat(0))))
        throw std::invalid_argument("free sum requires the origin in both summands");
    std::size_t na = a.ambient_dim(), nb = b.ambient_dim();
    std::vector<QVec> pts;
    for (const auto& v : a.vertices()) {
        QVec p(na + nb, Rat(0));
        std::copy(v.begin(), v.end(), p.begin());
        pts.push_back(std::move(p));
    }
    for (const auto& w : b.vertices()) {
        QVec p(na + nb, Rat(0));
        std::copy(w.begin(), w.end(), p.begin() + static_cast<std::ptrdiff_t>(na));
        pts.push_back(std::move(p));
    }
    return RationalPolytope::from_points(na + nb, std::move(pts));
}

}  // namespace eqehr
