#include "tori/numberfield.hpp"
#include "tori/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

namespace tori {

struct NumberField::Impl {
    ZPoly input_minpoly; // primitive, positive leading coefficient
    ZPoly minpoly;       // monic integral
    Int scale = 1;       // monic generator = scale * input generator
    int degree = 0;
    QComplex hint;
    Options opts;
    CertifiedRoot base_root; // certified at opts.precision_bits
    std::vector<std::vector<Int>> reduction; // x^(n+k) mod minpoly, k = 0..n-2

    mutable std::mutex cache_mu;
    mutable std::map<long, CertifiedRoot> cache;
};

namespace {

// squared distance threshold for accepting the root nearest to the hint
const Rat kHintTolerance2 = Rat(1) / 64; // (1/8)^2, on the input-generator scale

std::vector<std::vector<Int>> reduction_rows(const ZPoly& m, int n) {
    std::vector<std::vector<Int>> rows;
    if (n < 2) return rows;
    std::vector<Int> cur(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cur[static_cast<size_t>(j)] = -m[static_cast<size_t>(j)];
    rows.push_back(cur);
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<Int> next(static_cast<size_t>(n));
        Int top = cur[static_cast<size_t>(n - 1)];
        for (int j = n - 1; j >= 1; --j) next[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        next[0] = 0;
        for (int j = 0; j < n; ++j) next[static_cast<size_t>(j)] += top * rows[0][static_cast<size_t>(j)];
        rows.push_back(next);
        cur = next;
    }
    return rows;
}

} // namespace

NumberField NumberField::create(const std::vector<Int>& minpoly_ascending,
                                const std::string& hint_re, const std::string& hint_im,
                                const Options& opts) {
    ZPoly f = minpoly_ascending;
    zpoly_trim(f);
    int n = zpoly_degree(f);
    if (n < 1) throw Error("minimal polynomial must be nonzero of degree >= 1");
    f = zpoly_primitive_part(f);
    if (n >= 2 && f[0] == 0)
        throw ReduciblePolynomial("x divides the minimal polynomial");
    if (!zpoly_is_squarefree(f))
        throw ReduciblePolynomial("minimal polynomial has a repeated factor");

    auto impl = std::make_shared<Impl>();
    impl->input_minpoly = f;
    impl->opts = opts;
    impl->minpoly = zpoly_monicize(f, impl->scale);
    impl->degree = n;
    impl->hint = QComplex(parse_rational(hint_re), parse_rational(hint_im));
    impl->reduction = reduction_rows(impl->minpoly, n);

    if (n >= 2 && !zpoly_is_irreducible_monic(impl->minpoly))
        throw ReduciblePolynomial("minimal polynomial is reducible over Q");

    // select the certified root nearest the hint (on the input scale)
    QComplex scaled_hint(impl->hint.re * Rat(impl->scale), impl->hint.im * Rat(impl->scale));
    Rat scale2 = Rat(impl->scale) * Rat(impl->scale);
    if (n == 1) {
        Rat root = -Rat(impl->minpoly[0]);
        Rat d2 = (QComplex(root, Rat(0)) - scaled_hint).norm2() / scale2;
        if (d2 > kHintTolerance2) throw NoRootNearHint("the rational root is not near the hint");
        impl->base_root = CertifiedRoot{QComplex(root, Rat(0)), pow2(-opts.precision_bits)};
    } else {
        auto roots = isolate_roots(impl->minpoly, 64);
        std::vector<Rat> d2(roots.size());
        size_t best = 0;
        for (size_t j = 0; j < roots.size(); ++j) {
            d2[j] = (roots[j].center - scaled_hint).norm2() / scale2;
            if (d2[j] < d2[best]) best = j;
        }
        if (d2[best] > kHintTolerance2)
            throw NoRootNearHint("no root of the minimal polynomial is near the hint");
        for (size_t j = 0; j < roots.size(); ++j)
            if (j != best && d2[j] == d2[best])
                throw AmbiguousRoot("two roots are equidistant from the hint");
        impl->base_root =
            refine_root(impl->minpoly, roots[best], std::max<long>(64, opts.precision_bits));
    }
    return NumberField(std::move(impl));
}

int NumberField::degree() const { return impl_->degree; }
const ZPoly& NumberField::minpoly() const { return impl_->minpoly; }
const ZPoly& NumberField::input_minpoly() const { return impl_->input_minpoly; }
const Int& NumberField::generator_scale() const { return impl_->scale; }
QComplex NumberField::hint() const { return impl_->hint; }
long NumberField::max_precision_bits() const { return impl_->opts.max_precision_bits; }

CertifiedRoot NumberField::root(long bits) const {
    if (impl_->degree == 1) return {impl_->base_root.center, pow2(-std::max<long>(bits, 1))};
    if (pow2(-bits) >= impl_->base_root.radius) return impl_->base_root;
    long b = 64;
    while (b < bits) b *= 2;
    std::lock_guard<std::mutex> lock(impl_->cache_mu);
    auto it = impl_->cache.find(b);
    if (it != impl_->cache.end()) return it->second;
    // refine from the tightest enclosure already known
    CertifiedRoot start = impl_->base_root;
    for (auto& [kb, kr] : impl_->cache)
        if (kb < b && kr.radius < start.radius) start = kr;
    CertifiedRoot refined = refine_root(impl_->minpoly, start, b);
    impl_->cache.emplace(b, refined);
    return refined;
}

FieldElement NumberField::element(std::vector<Rat> coords) const {
    if (static_cast<int>(coords.size()) != impl_->degree)
        throw Error("coordinate vector length does not match the field degree");
    return FieldElement(*this, std::move(coords));
}

FieldElement NumberField::from_rational(const Rat& x) const {
    std::vector<Rat> c(static_cast<size_t>(impl_->degree), Rat(0));
    c[0] = x;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::zero() const { return from_rational(Rat(0)); }
FieldElement NumberField::one() const { return from_rational(Rat(1)); }

FieldElement NumberField::generator() const {
    std::vector<Rat> c(static_cast<size_t>(impl_->degree), Rat(0));
    if (impl_->degree == 1) {
        c[0] = -Rat(impl_->minpoly[0]);
    } else {
        c[1] = 1;
    }
    return FieldElement(*this, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t k = 1; k < coords_.size(); ++k)
        if (coords_[k] != 0) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_.same_field(o.field_) && coords_ == o.coords_;
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_field(b.field()))
        throw FieldMismatch("elements belong to different number fields");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rat> c(coords_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = coords_[k] + o.coords_[k];
    return {field_, std::move(c)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rat> c(coords_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = coords_[k] - o.coords_[k];
    return {field_, std::move(c)};
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> c(coords_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = -coords_[k];
    return {field_, std::move(c)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    size_t n = coords_.size();
    std::vector<Rat> conv(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.coords_[j] == 0) continue;
            conv[i + j] += coords_[i] * o.coords_[j];
        }
    }
    std::vector<Rat> c(conv.begin(), conv.begin() + static_cast<long>(n));
    const auto& red = field_.impl_->reduction;
    for (size_t k = n; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const auto& row = red[k - n];
        for (size_t j = 0; j < n; ++j) c[j] += conv[k] * Rat(row[j]);
    }
    return {field_, std::move(c)};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    size_t n = coords_.size();
    if (n == 1) return {field_, {Rat(1) / coords_[0]}};
    // extended Euclid in Q[x]: u*a + v*m = 1, inverse = u mod m
    using QP = std::vector<Rat>;
    auto deg = [](const QP& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<size_t>(i)] != 0) return i;
        return -1;
    };
    QP r0, r1 = coords_;
    for (const Int& c : field_.impl_->minpoly) r0.push_back(Rat(c));
    QP u0{Rat(0)}, u1{Rat(1)};
    while (true) {
        int d1 = deg(r1);
        assert(d1 >= 0);
        if (d1 == 0) break;
        int d0 = deg(r0);
        // r0 -= q * r1, u0 -= q * u1, then swap
        QP q(static_cast<size_t>(d0 - d1 + 1), Rat(0));
        QP rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            Rat c = rem[static_cast<size_t>(k + d1)] / r1[static_cast<size_t>(d1)];
            q[static_cast<size_t>(k)] = c;
            if (c == 0) continue;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<size_t>(k + j)] -= c * r1[static_cast<size_t>(j)];
        }
        QP u_new(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u_new[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u_new[i + j] -= q[i] * u1[j];
        }
        r0.swap(r1);
        r1 = rem;
        u0.swap(u1);
        u1 = u_new;
        if (deg(r1) < 0) throw Error("inverse: unexpected common factor with the minimal polynomial");
    }
    Rat lead = r1[static_cast<size_t>(deg(r1))];
    std::vector<Rat> out(n, Rat(0));
    for (size_t i = 0; i < u1.size() && i < n; ++i) out[i] = u1[i] / lead;
    // u1 has degree < n because deg(a), deg(u1*a mod ...) stay below deg(m)
    for (size_t i = n; i < u1.size(); ++i) assert(u1[i] == 0);
    return {field_, std::move(out)};
}

ComplexBall FieldElement::embed(long bits) const {
    if (bits < 1) bits = 1;
    if (is_rational()) return ComplexBall::exact(coords_[0], Rat(0));
    Rat threshold = pow2(4 - bits);
    for (long t = bits + 16;; t *= 2) {
        ComplexBall alpha = field_.root(t).enclosure();
        ComplexBall acc = ComplexBall::exact(Rat(0), Rat(0));
        for (int k = static_cast<int>(coords_.size()) - 1; k >= 0; --k) {
            acc = acc * alpha;
            acc.re = acc.re + RealBall::exact(coords_[static_cast<size_t>(k)]);
            acc = acc.truncated(t + 32);
        }
        if (acc.max_rad() < threshold) return acc;
        if (t > 512 * (bits + 64)) throw Error("embed: enclosure did not converge");
    }
}

int generated_subfield_dimension(std::span<const FieldElement> elems) {
    if (elems.empty()) return 1;
    const NumberField& field = elems[0].field();
    for (const auto& e : elems)
        if (!e.field().same_field(field))
            throw FieldMismatch("subfield dimension: mixed ambient fields");
    size_t n = static_cast<size_t>(field.degree());

    std::vector<std::vector<Rat>> rows; // reduced, sorted by pivot column
    std::vector<size_t> pivots;
    auto try_insert = [&](std::vector<Rat> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]];
            for (size_t j = 0; j < n; ++j) v[j] -= f * rows[r][j];
        }
        size_t p = n;
        for (size_t j = 0; j < n; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == n) return false;
        Rat lead = v[p];
        for (size_t j = 0; j < n; ++j) v[j] /= lead;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][p] == 0) continue;
            Rat f = rows[r][p];
            for (size_t j = 0; j < n; ++j) rows[r][j] -= f * v[j];
        }
        size_t at = 0;
        while (at < pivots.size() && pivots[at] < p) ++at;
        rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(at), p);
        return true;
    };

    std::vector<FieldElement> basis;
    if (try_insert(field.one().coordinates())) basis.push_back(field.one());
    for (const auto& e : elems)
        if (try_insert(e.coordinates())) basis.push_back(e);

    bool grew = true;
    while (grew) {
        grew = false;
        size_t count = basis.size();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = i; j < count; ++j) {
                FieldElement p = basis[i] * basis[j];
                if (try_insert(p.coordinates())) {
                    basis.push_back(std::move(p));
                    grew = true;
                }
            }
    }
    return static_cast<int>(rows.size());
}

} // namespace tori
