#include "ew/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "ew/linalg.hpp"
#include "ew/report.hpp"

namespace ew {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::NoSolution: return "NoSolution";
    case Verdict::ForcedRoot: return "ForcedRoot";
    case Verdict::Failure: return "Failure";
    }
    return "?";
}

void Tally::merge(const Tally& o)
{
    elements += o.elements;
    pairs_total += o.pairs_total;
    pairs_no_solution += o.pairs_no_solution;
    pairs_forced += o.pairs_forced;
    pairs_failed += o.pairs_failed;
    eliminations_total += o.eliminations_total;
    eliminations_actual += o.eliminations_actual;
    for (const auto& f : o.failures) {
        if (failures.size() >= kMaxRecordedFailures) break;
        failures.push_back(f);
    }
}

namespace {

// Everything about one Weyl element that the per-delta decisions need.
class ElementSolver {
public:
    virtual ~ElementSolver() = default;
    virtual void load(const WeylElement& w) = 0;
    virtual PairOutcome decide(std::size_t diff) = 0;
};

// The Method as written: tracked echelon of Id - w, one augmentation per
// delta, one appended row (alpha^vee | c) per candidate.
class LiteralSolver : public ElementSolver {
public:
    explicit LiteralSolver(const RootSystem& rs) : rs_(rs) {}

    void load(const WeylElement& w) override
    {
        ExactMatrix a = ExactMatrix::identity(rs_.dim);
        for (std::size_t i = 0; i < rs_.dim; ++i)
            for (std::size_t j = 0; j < rs_.dim; ++j)
                if (!w(i, j).is_zero()) a(i, j) -= w(i, j);
        te_ = echelon_tracked(a);
    }

    PairOutcome decide(std::size_t diff) override
    {
        PairOutcome out;
        out.diff_index = diff;
        out.eliminations = 1;
        EchelonForm aug = augment(te_, rs_.v0_differences[diff]);
        if (aug.rank != te_.form.rank) {
            out.verdict = Verdict::NoSolution;
            return out;
        }
        for (std::size_t k = 0; k < rs_.nstd_roots.size(); ++k) {
            const Root& r = rs_.nstd_roots[k];
            ++out.eliminations;
            Vec row = r.coroot;
            row.emplace_back();
            for (int c = 1; c <= (r.shorter ? 2 : 1); ++c) {
                row.back() = c;
                if (rank_with_row(aug, row) == aug.rank) {
                    out.verdict = Verdict::ForcedRoot;
                    out.root = static_cast<int>(k);
                    out.value = c;
                    return out;
                }
            }
        }
        out.verdict = Verdict::Failure;
        return out;
    }

private:
    const RootSystem& rs_;
    TrackedEchelon te_;
};

// Over Q after conjugating by D = diag(scale): w' = D^-1 w D, delta' = D^-1
// delta, beta = D alpha^vee, so that (Id - w) lambda = delta becomes
// (Id - w') lambda' = delta' with (lambda, alpha^vee) = (lambda', beta).
// With R = T (Id - w') in reduced echelon form of rank r:
//   delta is consistent iff rows r.. of T annihilate delta';
//   beta = sum_i c_i R_i (c_i = beta at pivot i) iff the pairing is forced,
//   and then it equals u . delta' with u = sum_i c_i T_i.
class RescaledSolver : public ElementSolver {
public:
    RescaledSolver(const RootSystem& rs, const Vec& scale) : rs_(rs), n_(rs.dim)
    {
        Vec inv;
        for (const auto& s : scale) inv.push_back(s.inverse());
        factor_.resize(n_ * n_);
        same_.assign(n_ * n_, false);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                factor_[i * n_ + j] = scale[j] * inv[i];
                same_[i * n_ + j] = factor_[i * n_ + j].is_one();
            }
        for (const auto& d : rs.v0_differences) {
            std::vector<Rational> v;
            for (std::size_t i = 0; i < n_; ++i) v.push_back(rational(d[i] * inv[i]));
            deltas_.push_back(std::move(v));
        }
        for (const auto& r : rs.nstd_roots) {
            std::vector<Rational> v;
            for (std::size_t i = 0; i < n_; ++i) v.push_back(rational(r.coroot[i] * scale[i]));
            betas_.push_back(std::move(v));
        }
        m_.resize(n_ * 2 * n_);
        info_.resize(betas_.size());
    }

    void load(const WeylElement& w) override
    {
        const std::size_t cols = 2 * n_;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const Scalar& x = w(i, j);
                Rational v = same_[i * n_ + j] ? x.rational_part() : rational(x * factor_[i * n_ + j]);
                m_[i * cols + j] = (i == j) ? Rational(1) - v : -v;
                m_[i * cols + n_ + j] = Rational(i == j ? 1 : 0);
            }
        }
        // Gauss-Jordan on (A' | Id).
        pivots_.clear();
        std::size_t row = 0;
        for (std::size_t col = 0; col < n_ && row < n_; ++col) {
            std::size_t p = row;
            while (p < n_ && m_[p * cols + col].is_zero()) ++p;
            if (p == n_) continue;
            if (p != row)
                for (std::size_t c = 0; c < cols; ++c) std::swap(m_[p * cols + c], m_[row * cols + c]);
            if (!m_[row * cols + col].is_one()) {
                Rational inv = m_[row * cols + col].inverse();
                for (std::size_t c = col; c < cols; ++c)
                    if (!m_[row * cols + c].is_zero()) m_[row * cols + c] *= inv;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == row || m_[r * cols + col].is_zero()) continue;
                Rational f = m_[r * cols + col];
                for (std::size_t c = col; c < cols; ++c)
                    if (!m_[row * cols + c].is_zero()) m_[r * cols + c] -= f * m_[row * cols + c];
            }
            pivots_.push_back(col);
            ++row;
        }
        rank_ = row;
        for (auto& i : info_) i.known = false;
    }

    PairOutcome decide(std::size_t diff) override
    {
        PairOutcome out;
        out.diff_index = diff;
        out.eliminations = 1;
        const auto& d = deltas_[diff];
        const std::size_t cols = 2 * n_;
        for (std::size_t r = rank_; r < n_; ++r) {
            Rational s;
            for (std::size_t j = 0; j < n_; ++j)
                if (!d[j].is_zero() && !m_[r * cols + n_ + j].is_zero()) s += m_[r * cols + n_ + j] * d[j];
            if (!s.is_zero()) {
                out.verdict = Verdict::NoSolution;
                return out;
            }
        }
        for (std::size_t k = 0; k < betas_.size(); ++k) {
            ++out.eliminations;
            const RootInfo& ri = info(k);
            if (!ri.in_row_space) continue;
            Rational v;
            for (std::size_t j = 0; j < n_; ++j)
                if (!d[j].is_zero() && !ri.u[j].is_zero()) v += ri.u[j] * d[j];
            const bool shorter = rs_.nstd_roots[k].shorter;
            if (v == Rational(1) || (shorter && v == Rational(2))) {
                out.verdict = Verdict::ForcedRoot;
                out.root = static_cast<int>(k);
                out.value = static_cast<int>(v.small_num());
                return out;
            }
        }
        out.verdict = Verdict::Failure;
        return out;
    }

private:
    struct RootInfo {
        bool known = false;
        bool in_row_space = false;
        std::vector<Rational> u;
    };

    static Rational rational(const Scalar& s)
    {
        if (!s.is_rational()) throw UnsupportedType("coordinate scaling left an irrational entry " + s.to_string());
        return s.rational_part();
    }

    const RootInfo& info(std::size_t k)
    {
        RootInfo& ri = info_[k];
        if (ri.known) return ri;
        ri.known = true;
        const std::size_t cols = 2 * n_;
        std::vector<Rational> res = betas_[k];
        std::vector<Rational> coef(rank_);
        for (std::size_t i = 0; i < rank_; ++i) {
            coef[i] = res[pivots_[i]];
            if (coef[i].is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c)
                if (!m_[i * cols + c].is_zero()) res[c] -= coef[i] * m_[i * cols + c];
        }
        ri.in_row_space = true;
        for (const auto& x : res)
            if (!x.is_zero()) ri.in_row_space = false;
        if (!ri.in_row_space) return ri;
        ri.u.assign(n_, Rational());
        for (std::size_t i = 0; i < rank_; ++i) {
            if (coef[i].is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c)
                if (!m_[i * cols + n_ + c].is_zero()) ri.u[c] += coef[i] * m_[i * cols + n_ + c];
        }
        return ri;
    }

    const RootSystem& rs_;
    std::size_t n_;
    std::vector<Scalar> factor_;
    std::vector<bool> same_;
    std::vector<std::vector<Rational>> deltas_;
    std::vector<std::vector<Rational>> betas_;
    std::vector<Rational> m_;
    std::vector<std::size_t> pivots_;
    std::size_t rank_ = 0;
    std::vector<RootInfo> info_;
};

std::unique_ptr<ElementSolver> make_solver(const RootSystem& rs, const WeylEnumerator& en, Strategy s)
{
    if (s == Strategy::Literal) return std::make_unique<LiteralSolver>(rs);
    return std::make_unique<RescaledSolver>(rs, en.scale());
}

const char* strategy_name(Strategy s) { return s == Strategy::Literal ? "literal" : "rescaled"; }

Tally run_unit(const RootSystem& rs, const WeylEnumerator& en, ElementSolver& solver, std::size_t unit,
               std::atomic<std::uint64_t>& progress)
{
    Tally t;
    const std::size_t nd = rs.v0_differences.size();
    en.run_unit(unit, [&](std::uint64_t index, const WeylElement& w) {
        solver.load(w);
        ++t.elements;
        ++t.eliminations_actual;
        ++t.eliminations_total;
        for (std::size_t d = 0; d < nd; ++d) {
            PairOutcome o = solver.decide(d);
            ++t.pairs_total;
            t.eliminations_total += o.eliminations;
            switch (o.verdict) {
            case Verdict::NoSolution: ++t.pairs_no_solution; break;
            case Verdict::ForcedRoot: ++t.pairs_forced; break;
            case Verdict::Failure:
                ++t.pairs_failed;
                if (t.failures.size() < Tally::kMaxRecordedFailures) {
                    o.w_index = index;
                    o.w = en.describe(index);
                    t.failures.push_back(std::move(o));
                }
                break;
            }
        }
        progress.fetch_add(1, std::memory_order_relaxed);
    });
    return t;
}

}  // namespace

std::vector<PairOutcome> analyze_element(const RootSystem& rs, const WeylElement& w, Strategy strategy)
{
    WeylEnumerator en(rs);
    auto solver = make_solver(rs, en, strategy);
    solver->load(w);
    std::vector<PairOutcome> out;
    for (std::size_t d = 0; d < rs.v0_differences.size(); ++d) out.push_back(solver->decide(d));
    return out;
}

VerificationReport verify_only_if(const RootSystem& rs, const VerifyOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    WeylEnumerator en(rs);
    VerificationReport rep;
    rep.factor = rs.ftype;
    rep.weyl_order = rs.weyl_order();
    rep.eliminations_bound = rs.elimination_bound();

    Checkpoint ck;
    ck.factor = rs.ftype.name();
    ck.strategy = strategy_name(opts.strategy);
    if (!opts.checkpoint.empty()) {
        if (auto prior = read_checkpoint(opts.checkpoint)) {
            if (prior->factor != ck.factor || prior->strategy != ck.strategy)
                throw std::runtime_error("checkpoint " + opts.checkpoint + " belongs to " + prior->factor + " (" +
                                         prior->strategy + ")");
            ck = std::move(*prior);
        }
    }
    const double prior_ms = ck.elapsed_ms;
    const std::size_t prior_units = ck.units.size();

    std::vector<std::optional<Tally>> results(en.units());
    std::vector<std::size_t> todo;
    std::uint64_t already = 0;
    for (std::size_t u = 0; u < en.units(); ++u) {
        auto it = ck.units.find(u);
        if (it != ck.units.end()) {
            results[u] = it->second;
            already += it->second.elements;
        } else {
            todo.push_back(u);
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> finished{0};
    std::atomic<std::uint64_t> progress{already};
    std::mutex mu;
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    auto worker = [&] {
        auto solver = make_solver(rs, en, opts.strategy);
        for (;;) {
            if (opts.stop_after_units && finished.load() >= *opts.stop_after_units) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            const std::size_t u = todo[i];
            Tally t = run_unit(rs, en, *solver, u, progress);
            std::lock_guard lock(mu);
            if (opts.stop_after_units && finished.load() >= *opts.stop_after_units) return;
            results[u] = t;
            ++finished;
            if (!opts.checkpoint.empty()) {
                ck.units[u] = std::move(t);
                ck.elapsed_ms = prior_ms + elapsed_ms();
                write_checkpoint(opts.checkpoint, ck);
            }
        }
    };

    std::mutex pmu;
    std::condition_variable pcv;
    bool done = false;
    std::thread reporter;
    if (opts.progress_seconds > 0) {
        reporter = std::thread([&] {
            std::unique_lock lock(pmu);
            const auto every = std::chrono::duration<double>(opts.progress_seconds);
            while (!pcv.wait_for(lock, every, [&] { return done; })) {
                std::fprintf(stderr, "[verify %s] %llu/%llu elements, %zu/%zu units, %.0f s\n", ck.factor.c_str(),
                             static_cast<unsigned long long>(progress.load()),
                             static_cast<unsigned long long>(en.size()), prior_units + finished.load(),
                             en.units(), (prior_ms + elapsed_ms()) / 1000.0);
            }
        });
    }

    const unsigned nw = std::max(1U, opts.workers);
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (reporter.joinable()) {
        {
            std::lock_guard lock(pmu);
            done = true;
        }
        pcv.notify_all();
        reporter.join();
    }

    for (const auto& r : results)
        if (r) rep.tally.merge(*r);
    rep.elapsed_ms = prior_ms + elapsed_ms();
    return rep;
}

IfDirection verify_if(const RootSystem& rs)
{
    IfDirection out;
    const auto& nstd = rs.nstd_roots;
    std::vector<int> orbit_of(nstd.size(), -1);
    for (std::size_t k = 0; k < nstd.size(); ++k) {
        if (orbit_of[k] >= 0) continue;
        const int id = static_cast<int>(out.orbits.size());
        out.orbits.emplace_back();
        // An orbit larger than n^std has already left it.
        auto orb = orbit(rs, nstd[k].vec, rs.wm_generators, nstd.size() + 1);
        if (!orb) return out;
        for (const auto& v : *orb) {
            std::size_t j = 0;
            while (j < nstd.size() && nstd[j].vec != v) ++j;
            if (j == nstd.size()) return out;  // left n^std
            orbit_of[j] = id;
            out.orbits.back().push_back(static_cast<int>(j));
        }
        std::sort(out.orbits.back().begin(), out.orbits.back().end());
    }

    out.orbits_are_length_classes = true;
    for (std::size_t a = 0; a < nstd.size(); ++a)
        for (std::size_t b = 0; b < nstd.size(); ++b) {
            const bool same_length = dot(nstd[a].vec, nstd[a].vec) == dot(nstd[b].vec, nstd[b].vec);
            if (same_length != (orbit_of[a] == orbit_of[b])) out.orbits_are_length_classes = false;
        }

    for (const auto& orb : out.orbits) {
        std::optional<IfDirection::Witness> w;
        for (std::size_t d = 0; d < rs.v0_differences.size() && !w; ++d)
            for (int k : orb) {
                const Root& r = nstd[static_cast<std::size_t>(k)];
                for (int c = 1; c <= (r.shorter ? 2 : 1) && !w; ++c)
                    if (rs.v0_differences[d] == Scalar(c) * r.vec) w = IfDirection::Witness{d, k, c};
                if (w) break;
            }
        out.witnesses.push_back(w);
    }
    return out;
}

ConverseMembership verify_converse_membership(const RootSystem& rs)
{
    ConverseMembership out;
    std::unordered_set<Vec, VecHash> diffs(rs.v0_differences.begin(), rs.v0_differences.end());
    for (const auto& r : rs.nstd_roots) {
        for (int c = 1; c <= (r.shorter ? 2 : 1); ++c) {
            ++out.checked;
            Vec v = Scalar(c) * r.vec;
            if (!diffs.count(v)) out.missing.push_back(std::to_string(c) + "*" + to_string(r.vec));
        }
    }
    return out;
}

VerificationReport verify_classical(const FactorType& ftype, const VerifyOptions& opts)
{
    if (ftype.exceptional()) throw UnsupportedType(ftype.name() + " is not a classical type");
    RootSystem rs = build_root_system(ftype);
    const std::uint64_t work = rs.weyl_order() * rs.v0_differences.size();
    if (work > opts.budget)
        throw BudgetExceeded(ftype.name() + ": |W| * |differences| = " + std::to_string(work) + " exceeds budget " +
                             std::to_string(opts.budget));
    return verify_all(rs, opts);
}

VerificationReport verify_all(const RootSystem& rs, const VerifyOptions& opts)
{
    VerificationReport rep = verify_only_if(rs, opts);
    rep.if_direction = verify_if(rs);
    rep.converse = verify_converse_membership(rs);
    return rep;
}

}  // namespace ew
