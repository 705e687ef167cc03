#include "unitred/lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <optional>

#include "unitred/errors.hpp"

namespace unitred {

// --- LLL ---------------------------------------------------------------------

namespace {

struct Gso {
    RatMatrix mu;
    std::vector<Rat> b;  // squared lengths of the Gram-Schmidt vectors
};

Gso gram_schmidt(const IntMatrix& g) {
    const std::size_t n = g.rows();
    Gso s{RatMatrix(n, n), std::vector<Rat>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat v = g(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= s.mu(j, k) * s.mu(i, k) * s.b[k];
            s.mu(i, j) = v / s.b[j];
        }
        Rat v = g(i, i);
        for (std::size_t k = 0; k < i; ++k) v -= s.mu(i, k) * s.mu(i, k) * s.b[k];
        if (v <= 0) throw InvalidInput("lll_reduce: Gram matrix is not positive definite");
        s.b[i] = v;
    }
    return s;
}

void swap_basis(IntMatrix& t, IntMatrix& g, std::size_t a, std::size_t b) {
    t.swap_rows(a, b);
    g.swap_rows(a, b);
    for (std::size_t i = 0; i < g.rows(); ++i) std::swap(g(i, a), g(i, b));
}

// b_k <- b_k - r b_j, keeping the Gram matrix and mu consistent.
void reduce_against(IntMatrix& t, IntMatrix& g, Gso& s, std::size_t k, std::size_t j, const Int& r) {
    const std::size_t n = g.rows();
    for (std::size_t c = 0; c < n; ++c) t(k, c) -= r * t(j, c);
    const Int gkk = g(k, k) - 2 * r * g(k, j) + r * r * g(j, j);
    for (std::size_t c = 0; c < n; ++c) {
        if (c == k) continue;
        g(k, c) -= r * g(j, c);
        g(c, k) = g(k, c);
    }
    g(k, k) = gkk;
    for (std::size_t l = 0; l < j; ++l) s.mu(k, l) -= r * s.mu(j, l);
    s.mu(k, j) -= r;
}

}  // namespace

LllResult lll_reduce(const IntMatrix& gram, const Rat& delta) {
    const std::size_t n = gram.rows();
    if (gram.cols() != n) throw InvalidInput("lll_reduce: Gram matrix not square");
    IntMatrix t = IntMatrix::identity(n);
    IntMatrix g = gram;
    if (n <= 1) {
        if (n == 1 && g(0, 0) <= 0) throw InvalidInput("lll_reduce: Gram matrix is not positive definite");
        return {t, g};
    }
    Gso s = gram_schmidt(g);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            const Int r = round_nearest(s.mu(k, j));
            if (r != 0) reduce_against(t, g, s, k, j, r);
        }
        // Only b_k changed, and B_k is unaffected by size reduction.
        if (s.b[k] >= (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1]) {
            ++k;
        } else {
            swap_basis(t, g, k, k - 1);
            s = gram_schmidt(g);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return {t, g};
}

bool is_lll_reduced(const IntMatrix& gram, const Rat& delta) {
    const Gso s = gram_schmidt(gram);
    const Rat half(1, 2);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(s.mu(i, j)) > half) return false;
    for (std::size_t k = 1; k < gram.rows(); ++k)
        if (s.b[k] < (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1]) return false;
    return true;
}

// --- enumeration -------------------------------------------------------------

bool canonical_less(const LatticeVector& a, const LatticeVector& b) {
    if (a.value != b.value) return a.value < b.value;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
}

void make_sign_canonical(std::vector<Int>& v) {
    for (const auto& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        return;
    }
}

PreparedLattice prepare_lattice(const IntMatrix& gram) {
    LllResult r = lll_reduce(gram);
    LdlResult f = ldl(to_rat_matrix(r.reduced));
    if (!f.positive_definite()) throw InvalidInput("enumeration: Gram matrix is not positive definite");
    return {std::move(r.transform), std::move(r.reduced), std::move(f.lower), std::move(f.pivots)};
}

namespace {

// Integers x with pivot * (x - center)^2 <= remaining, as [lo, hi]; empty when lo > hi.
std::pair<Int, Int> coordinate_interval(const Rat& center, const Rat& remaining, const Rat& pivot) {
    if (remaining < 0) return {Int(1), Int(0)};
    const Int& p = center.get_num();
    const Int& q = center.get_den();
    // (q x - p)^2 is an integer, so (q x - p)^2 <= t q^2 iff |q x - p| <= isqrt(floor(t q^2)).
    const Rat scaled = remaining / pivot * q * q;
    Int w = floor(scaled), r;
    mpz_sqrt(r.get_mpz_t(), w.get_mpz_t());
    Int lo, hi;
    Int a = p - r, b = p + r;
    mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
    return {lo, hi};
}

struct Frontier {
    std::size_t level;        // next level to assign
    std::vector<Int> x;       // coordinates at levels > level (others zero)
    Rat remaining;
    bool all_zero;
};

class Enumerator {
   public:
    Enumerator(const PreparedLattice& lat, const Rat& bound, const EnumBudget& budget, std::atomic<std::uint64_t>* shared_nodes,
               std::atomic<bool>* stop)
        : lat_(lat), bound_(bound), budget_(budget), shared_nodes_(shared_nodes), stop_(stop), x_(lat.dim()) {}

    // Children of a frontier node, or completed vectors when it sits at level 0.
    void expand(const Frontier& f, std::vector<Frontier>& children) {
        x_ = f.x;
        for_each_candidate(f.level, f.remaining, f.all_zero, [&](const Int& xi, const Rat& rem, bool zero) {
            if (f.level == 0) {
                if (!zero) emit(rem);
                return;
            }
            Frontier child{f.level - 1, x_, rem, zero};
            child.x[f.level] = xi;
            children.push_back(std::move(child));
        });
    }

    void search(const Frontier& f) {
        x_ = f.x;
        visit(f.level, f.remaining, f.all_zero);
    }

    std::vector<LatticeVector>& results() { return out_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exceeded() const { return exceeded_; }

    void flush() {
        if (shared_nodes_) shared_nodes_->fetch_add(unflushed_);
        unflushed_ = 0;
    }

   private:
    template <class F>
    void for_each_candidate(std::size_t i, const Rat& remaining, bool all_zero, F&& f) {
        Rat center = 0;
        if (!all_zero)
            for (std::size_t j = i + 1; j < lat_.dim(); ++j)
                if (x_[j] != 0) center -= lat_.lower(j, i) * x_[j];
        auto [lo, hi] = coordinate_interval(center, remaining, lat_.pivots[i]);
        // Only one of +-v is visited: the top non-zero coordinate is positive.
        if (all_zero && lo < 0) lo = 0;
        for (Int xi = lo; xi <= hi; ++xi) {
            if (!count_node()) return;
            const Rat d = xi - center;
            const Rat rem = remaining - lat_.pivots[i] * d * d;
            x_[i] = xi;
            f(xi, rem, all_zero && xi == 0);
            if (exceeded_) return;
        }
        x_[i] = 0;
    }

    void visit(std::size_t i, const Rat& remaining, bool all_zero) {
        for_each_candidate(i, remaining, all_zero, [&](const Int&, const Rat& rem, bool zero) {
            if (i == 0) {
                if (!zero) emit(rem);
            } else {
                visit(i - 1, rem, zero);
            }
        });
    }

    bool count_node() {
        ++nodes_;
        ++unflushed_;
        if (stop_ && stop_->load(std::memory_order_relaxed)) {
            exceeded_ = true;
            return false;
        }
        std::uint64_t total = nodes_;
        if (shared_nodes_ && unflushed_ >= 4096) {
            total = shared_nodes_->fetch_add(unflushed_) + unflushed_;
            unflushed_ = 0;
        } else if (shared_nodes_) {
            total = shared_nodes_->load(std::memory_order_relaxed) + unflushed_;
        }
        if (total > budget_.max_nodes) {
            exceeded_ = true;
            if (stop_) stop_->store(true);
            return false;
        }
        return true;
    }

    void emit(const Rat& remaining) {
        const std::size_t n = lat_.dim();
        LatticeVector v;
        v.coeffs.assign(n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x_[i] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) v.coeffs[c] += x_[i] * lat_.transform(i, c);
        }
        make_sign_canonical(v.coeffs);
        const Rat value = bound_ - remaining;
        v.value = value.get_num();
        out_.push_back(std::move(v));
        if (out_.size() > budget_.max_results) {
            exceeded_ = true;
            if (stop_) stop_->store(true);
        }
    }

    const PreparedLattice& lat_;
    const Rat& bound_;
    const EnumBudget& budget_;
    std::atomic<std::uint64_t>* shared_nodes_;
    std::atomic<bool>* stop_;
    std::vector<Int> x_;
    std::vector<LatticeVector> out_;
    std::uint64_t nodes_ = 0;
    std::uint64_t unflushed_ = 0;
    bool exceeded_ = false;
};

[[noreturn]] void throw_budget(std::uint64_t nodes, std::uint64_t results, const Rat& bound) {
    throw BudgetExceeded("enumeration budget exceeded below bound " + to_string(bound) + " after " +
                             std::to_string(nodes) + " nodes",
                         nodes, results, to_string(bound));
}

void check_bound(const Rat& bound) {
    if (bound < 0) throw InvalidInput("enumeration bound must be non-negative");
}

}  // namespace

EnumerationResult enumerate_below_serial(const PreparedLattice& lattice, const Rat& bound, const EnumBudget& budget) {
    check_bound(bound);
    EnumerationResult out;
    if (lattice.dim() == 0) return out;
    Enumerator e(lattice, bound, budget, nullptr, nullptr);
    e.search(Frontier{lattice.dim() - 1, std::vector<Int>(lattice.dim()), bound, true});
    if (e.exceeded()) throw_budget(e.nodes(), e.results().size(), bound);
    out.vectors = std::move(e.results());
    out.nodes = e.nodes();
    std::sort(out.vectors.begin(), out.vectors.end(), canonical_less);
    return out;
}

EnumerationResult enumerate_below(const PreparedLattice& lattice, const Rat& bound, const EnumBudget& budget) {
    check_bound(bound);
    EnumerationResult out;
    const std::size_t n = lattice.dim();
    if (n == 0) return out;

    // Breadth-first expansion of the top levels until there is enough work to share.
    const std::size_t target = 32 * static_cast<std::size_t>(omp_get_max_threads());
    std::vector<Frontier> frontier{Frontier{n - 1, std::vector<Int>(n), bound, true}};
    std::vector<LatticeVector> done;
    std::uint64_t prefix_nodes = 0;
    {
        Enumerator e(lattice, bound, budget, nullptr, nullptr);
        while (!frontier.empty() && frontier.size() < target && frontier.front().level > 0) {
            std::vector<Frontier> next;
            for (const auto& f : frontier) {
                e.expand(f, next);
                if (e.exceeded()) throw_budget(e.nodes(), e.results().size(), bound);
            }
            frontier = std::move(next);
        }
        prefix_nodes = e.nodes();
        done = std::move(e.results());
    }

    std::atomic<std::uint64_t> nodes{prefix_nodes};
    std::atomic<bool> stop{false};
    std::vector<std::vector<LatticeVector>> parts(frontier.size());
    const long count = static_cast<long>(frontier.size());
#pragma omp parallel
    {
        Enumerator e(lattice, bound, budget, &nodes, &stop);
#pragma omp for schedule(dynamic, 1)
        for (long k = 0; k < count; ++k) {
            if (stop.load()) continue;
            e.search(frontier[static_cast<std::size_t>(k)]);
            parts[static_cast<std::size_t>(k)] = std::move(e.results());
            e.results().clear();
        }
        e.flush();
    }

    std::size_t total = done.size();
    for (const auto& p : parts) total += p.size();
    if (stop.load()) throw_budget(nodes.load(), total, bound);
    if (total > budget.max_results) throw_budget(nodes.load(), total, bound);

    out.vectors = std::move(done);
    out.vectors.reserve(total);
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out.vectors));
    out.nodes = nodes.load();
    std::sort(out.vectors.begin(), out.vectors.end(), canonical_less);
    return out;
}

EnumerationResult enumerate_below(const IntMatrix& gram, const Rat& bound, const EnumBudget& budget) {
    return enumerate_below(prepare_lattice(gram), bound, budget);
}

EnumerationResult enumerate_below_serial(const IntMatrix& gram, const Rat& bound, const EnumBudget& budget) {
    return enumerate_below_serial(prepare_lattice(gram), bound, budget);
}

ShortestResult shortest_vectors(const IntMatrix& gram, const EnumBudget& budget) {
    const PreparedLattice lat = prepare_lattice(gram);
    Int bound = lat.reduced(0, 0);
    for (std::size_t i = 1; i < lat.dim(); ++i) bound = std::min(bound, Int(lat.reduced(i, i)));
    EnumerationResult e = enumerate_below(lat, Rat(bound), budget);
    if (e.vectors.empty()) throw std::logic_error("shortest_vectors: enumeration missed the reduced basis vector");
    ShortestResult r;
    r.min_value = e.vectors.front().value;
    for (auto& v : e.vectors) {
        if (v.value != r.min_value) break;
        r.minima.push_back(std::move(v));
    }
    r.searched_bound = bound;
    r.nodes = e.nodes;
    return r;
}

}  // namespace unitred
