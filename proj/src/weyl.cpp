#include "ew/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <unordered_set>

namespace ew {

ExactMatrix SignedPerm::matrix() const
{
    ExactMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = sign[j];
    return m;
}

std::string SignedPerm::to_string() const
{
    std::string out = "[";
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (j) out += ",";
        out += (sign[j] < 0 ? "-" : "") + std::to_string(perm[j] + 1);
    }
    return out + "]";
}

std::optional<SignedPerm> as_signed_perm(const ExactMatrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    SignedPerm sp;
    std::vector<bool> hit(m.rows(), false);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::optional<std::size_t> at;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            if (at) return std::nullopt;
            at = i;
        }
        if (!at || hit[*at]) return std::nullopt;
        const Scalar& x = m(*at, j);
        int s = x.is_one() ? 1 : (-x).is_one() ? -1 : 0;
        if (s == 0) return std::nullopt;
        hit[*at] = true;
        sp.perm.push_back(*at);
        sp.sign.push_back(s);
    }
    return sp;
}

WeylElement simple_reflection(const RootSystem& rs, int i)
{
    if (i < 1 || i > static_cast<int>(rs.simple_roots.size()))
        throw IndexOutOfRange("simple reflection s" + std::to_string(i) + " out of range for " + rs.ftype.name());
    const Root& a = rs.simple_roots[static_cast<std::size_t>(i - 1)];
    WeylElement m = ExactMatrix::identity(rs.dim);
    for (std::size_t r = 0; r < rs.dim; ++r)
        for (std::size_t c = 0; c < rs.dim; ++c)
            if (!a.vec[r].is_zero() && !a.coroot[c].is_zero()) m(r, c) -= a.vec[r] * a.coroot[c];
    return m;
}

WeylElement word_to_element(const RootSystem& rs, const WeylWord& w)
{
    WeylElement m = ExactMatrix::identity(rs.dim);
    for (int letter : w) m = m * simple_reflection(rs, letter);
    return m;
}

Vec apply_word(const RootSystem& rs, const WeylWord& w, const Vec& v)
{
    Vec out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it < 1 || *it > static_cast<int>(rs.simple_roots.size()))
            throw IndexOutOfRange("simple reflection s" + std::to_string(*it) + " out of range for " + rs.ftype.name());
        const Root& a = rs.simple_roots[static_cast<std::size_t>(*it - 1)];
        Scalar p = dot(out, a.coroot);
        if (!p.is_zero()) out = out - p * a.vec;
    }
    return out;
}

std::uint64_t CosetFiltration::size() const
{
    std::uint64_t n = 1;
    for (const auto& l : layers) n *= l.size();
    return n;
}

namespace {

// Shortest words for the even sign changes on `coords`, found by breadth-first
// search in the group generated by `letters` (all signed permutations).
std::vector<WeylWord> sign_change_words(const RootSystem& rs, const std::vector<int>& letters,
                                        const std::vector<std::size_t>& coords)
{
    std::map<int, SignedPerm> gens;
    for (int l : letters) gens[l] = *as_signed_perm(simple_reflection(rs, l));

    auto key = [](const SignedPerm& p) {
        std::string k;
        for (std::size_t j = 0; j < p.perm.size(); ++j) k += static_cast<char>('a' + p.perm[j] * 2 + (p.sign[j] < 0));
        return k;
    };
    auto compose = [](const SignedPerm& a, const SignedPerm& b) {  // a * b
        SignedPerm c = b;
        for (std::size_t j = 0; j < b.perm.size(); ++j) {
            c.perm[j] = a.perm[b.perm[j]];
            c.sign[j] = a.sign[b.perm[j]] * b.sign[j];
        }
        return c;
    };

    SignedPerm id;
    for (std::size_t j = 0; j < rs.dim; ++j) {
        id.perm.push_back(j);
        id.sign.push_back(1);
    }
    std::map<std::string, WeylWord> found{{key(id), {}}};
    std::deque<std::pair<SignedPerm, WeylWord>> queue{{id, {}}};
    while (!queue.empty()) {
        auto [g, w] = queue.front();
        queue.pop_front();
        for (const auto& [l, s] : gens) {
            SignedPerm h = compose(s, g);
            auto k = key(h);
            if (found.count(k)) continue;
            WeylWord hw{l};
            hw.insert(hw.end(), w.begin(), w.end());
            found[k] = hw;
            queue.emplace_back(std::move(h), std::move(hw));
        }
    }

    std::vector<WeylWord> out;
    const auto k = coords.size();
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
        if (std::popcount(mask) % 2) continue;
        SignedPerm t = id;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1U) t.sign[coords[i]] = -1;
        out.push_back(found.at(key(t)));
    }
    return out;
}

}  // namespace

CosetFiltration coset_filtration(const RootSystem& rs)
{
    if (!rs.ftype.exceptional())
        throw UnsupportedType(rs.ftype.name() + ": coset filtrations exist only for E6 and E7");
    const bool e6 = rs.ftype.family == Family::E6;
    const int b = e6 ? 0 : 1;
    CosetFiltration f;
    // W^{A_k/A_{k-1}} = {1} and s_j s_{j+1} ... s_k ... s_{j+1} s_j for j = k..1.
    for (int k = 1; k <= 4; ++k) {
        std::vector<WeylWord> layer{{}};
        for (int j = k; j >= 1; --j) {
            WeylWord w;
            for (int i = j; i <= k; ++i) w.push_back(i + b);
            for (int i = k - 1; i >= j; --i) w.push_back(i + b);
            layer.push_back(std::move(w));
        }
        f.layers.push_back(std::move(layer));
    }
    std::vector<std::size_t> coords;
    std::vector<int> letters;
    for (int i = 0; i < 5; ++i) {
        coords.push_back(static_cast<std::size_t>(i + b));
        letters.push_back(i + 1 + b);
    }
    f.layers.push_back(sign_change_words(rs, letters, coords));

    auto table_layer = [](const WeightTable& t) {
        std::vector<WeylWord> layer;
        for (std::size_t r = 0; r < t.rows.size(); ++r) layer.push_back(t.word(r));
        return layer;
    };
    if (e6) {
        f.layers.push_back(table_layer(e6_table()));
    } else {
        f.layers.push_back(table_layer(e7_inner_table()));
        f.layers.push_back(table_layer(e7_outer_table()));
    }
    return f;
}

namespace {

// Surd carried by coordinate i across all roots: 1, sqrt2 or sqrt3.
Vec coordinate_scale(const RootSystem& rs)
{
    Vec scale(rs.dim, Scalar(1));
    for (std::size_t i = 0; i < rs.dim; ++i) {
        int basis = -1;
        for (const auto& r : rs.all_roots) {
            const Scalar& x = r.vec[i];
            for (int b = 0; b < 4; ++b) {
                if (x.coeff(static_cast<Scalar::Basis>(b)).is_zero()) continue;
                if (basis >= 0 && basis != b) throw UnsupportedType("coordinate mixes surds");
                basis = b;
            }
        }
        if (basis == Scalar::kSqrt2) scale[i] = Scalar::sqrt2();
        else if (basis == Scalar::kSqrt3) scale[i] = Scalar::sqrt3();
        else if (basis == Scalar::kSqrt6) scale[i] = Scalar::sqrt6();
    }
    return scale;
}

std::uint64_t factorial(std::uint64_t n)
{
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Sign masks allowed for the family, in increasing order.
std::vector<unsigned> sign_masks(const RootSystem& rs)
{
    std::vector<unsigned> out;
    const Family f = rs.ftype.family;
    if (f == Family::A) return {0};
    for (unsigned m = 0; m < (1U << rs.dim); ++m)
        if (f == Family::B || f == Family::C || std::popcount(m) % 2 == 0) out.push_back(m);
    return out;
}

SignedPerm signed_perm(const std::vector<std::size_t>& perm, unsigned mask)
{
    SignedPerm sp{perm, std::vector<int>(perm.size(), 1)};
    for (std::size_t j = 0; j < perm.size(); ++j)
        if ((mask >> j) & 1U) sp.sign[j] = -1;
    return sp;
}

}  // namespace

WeylEnumerator::WeylEnumerator(const RootSystem& rs) : rs_(&rs), exceptional_(rs.ftype.exceptional())
{
    scale_ = coordinate_scale(rs);
    if (exceptional_) {
        CosetFiltration f = coset_filtration(rs);
        std::uint64_t stride = 1;
        for (const auto& layer : f.layers) {
            std::vector<LayerElem> elems;
            for (const auto& w : layer) {
                WeylElement m = word_to_element(rs, w);
                auto sp = as_signed_perm(m);
                elems.push_back({w, std::move(m), std::move(sp)});
            }
            stride_.push_back(stride);
            stride *= elems.size();
            layers_.push_back(std::move(elems));
        }
        units_ = layers_.back().size();
        unit_size_ = stride_.back();
    } else {
        units_ = rs.dim;
        unit_size_ = factorial(rs.dim - 1) * sign_masks(rs).size();
    }
}

void WeylEnumerator::descend(std::size_t layer, std::uint64_t base, const WeylElement& prefix, const Visitor& visit) const
{
    const auto& elems = layers_[layer];
    WeylElement p(prefix.rows(), prefix.cols());
    for (std::size_t d = 0; d < elems.size(); ++d) {
        const LayerElem& e = elems[d];
        if (e.sp) {
            // prefix * S: column j of the product is sign_j times column perm_j of prefix.
            for (std::size_t j = 0; j < p.cols(); ++j) {
                const std::size_t src = e.sp->perm[j];
                const bool neg = e.sp->sign[j] < 0;
                for (std::size_t i = 0; i < p.rows(); ++i) p(i, j) = neg ? -prefix(i, src) : prefix(i, src);
            }
        } else {
            p = prefix * e.matrix;
        }
        const std::uint64_t idx = base + d * stride_[layer];
        if (layer == 0) visit(idx, p);
        else descend(layer - 1, idx, p, visit);
    }
}

void WeylEnumerator::run_unit(std::size_t unit, const Visitor& visit) const
{
    if (unit >= units_) throw IndexOutOfRange("enumeration unit " + std::to_string(unit) + " out of range");
    const std::uint64_t base = unit_begin(unit);
    if (exceptional_) {
        const std::size_t top = layers_.size() - 1;
        descend(top - 1, base, layers_[top][unit].matrix, visit);
        return;
    }
    const std::size_t n = rs_->dim;
    std::vector<std::size_t> perm{unit};
    for (std::size_t i = 0; i < n; ++i)
        if (i != unit) perm.push_back(i);
    const auto masks = sign_masks(*rs_);
    std::uint64_t idx = base;
    do {
        for (unsigned m : masks) visit(idx++, signed_perm(perm, m).matrix());
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

void WeylEnumerator::run_all(const Visitor& visit) const
{
    for (std::size_t u = 0; u < units_; ++u) run_unit(u, visit);
}

std::string WeylEnumerator::describe(std::uint64_t index) const
{
    if (index >= size()) throw IndexOutOfRange("element index out of range");
    if (exceptional_) {
        WeylWord w;
        for (std::size_t l = layers_.size(); l-- > 0;) {
            const auto d = static_cast<std::size_t>(index / stride_[l]);
            index %= stride_[l];
            const auto& part = layers_[l][d].word;
            w.insert(w.end(), part.begin(), part.end());
        }
        return to_string(w);
    }
    return as_signed_perm(element_at(index))->to_string();
}

WeylElement WeylEnumerator::element_at(std::uint64_t index) const
{
    if (index >= size()) throw IndexOutOfRange("element index out of range");
    if (exceptional_) {
        WeylElement m = ExactMatrix::identity(rs_->dim);
        for (std::size_t l = layers_.size(); l-- > 0;) {
            const auto d = static_cast<std::size_t>(index / stride_[l]);
            index %= stride_[l];
            m = m * layers_[l][d].matrix;
        }
        return m;
    }
    const std::size_t n = rs_->dim;
    const auto masks = sign_masks(*rs_);
    const std::size_t unit = static_cast<std::size_t>(index / unit_size_);
    std::uint64_t r = index % unit_size_;
    const unsigned mask = masks[static_cast<std::size_t>(r % masks.size())];
    std::uint64_t prank = r / masks.size();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != unit) rest.push_back(i);
    std::vector<std::size_t> perm{unit};
    // Unrank the lexicographic permutation of `rest`.
    for (std::size_t k = rest.size(); k > 0; --k) {
        const std::uint64_t f = factorial(k - 1);
        const auto pick = static_cast<std::size_t>(prank / f);
        prank %= f;
        perm.push_back(rest[pick]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return signed_perm(perm, mask).matrix();
}

std::optional<std::vector<Vec>> orbit(const RootSystem& rs, const Vec& seed, const std::vector<int>& generators,
                                      std::size_t cap)
{
    std::unordered_set<Vec, VecHash> seen{seed};
    std::vector<Vec> out{seed};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int g : generators) {
            Vec u = apply_word(rs, {g}, out[head]);
            if (seen.count(u)) continue;
            if (out.size() >= cap) return std::nullopt;
            seen.insert(u);
            out.push_back(std::move(u));
        }
    }
    return out;
}

std::vector<int> all_generators(const RootSystem& rs)
{
    std::vector<int> g;
    for (int i = 1; i <= rs.ftype.rank; ++i) g.push_back(i);
    return g;
}

}  // namespace ew
