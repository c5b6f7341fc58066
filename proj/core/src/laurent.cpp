#include "hdm/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hdm {

void LaurentPoly2::add_term(int i, int j, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Q LaurentPoly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Q(0) : it->second;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
    LaurentPoly2 r;
    for (auto& [e1, c1] : t_)
        for (auto& [e2, c2] : o.t_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

std::complex<double> LaurentPoly2::eval(std::complex<double> z, std::complex<double> w) const {
    std::complex<double> s = 0;
    for (auto& [e, c] : t_) s += c.get_d() * std::pow(z, e.first) * std::pow(w, e.second);
    return s;
}

namespace {
Q qpow(const Q& x, int k) {
    Q r = 1, b = x;
    if (k < 0) {
        if (x == 0) throw std::domain_error("negative power of zero");
        b = 1 / x;
        k = -k;
    }
    for (; k; k >>= 1, b *= b)
        if (k & 1) r *= b;
    return r;
}
}  // namespace

Q LaurentPoly2::eval(const Q& z, const Q& w) const {
    Q s = 0;
    for (auto& [e, c] : t_) s += c * qpow(z, e.first) * qpow(w, e.second);
    return s;
}

LaurentPoly2 LaurentPoly2::scale_vars(const Q& sz, const Q& sw) const {
    LaurentPoly2 r;
    for (auto& [e, c] : t_) r.add_term(e.first, e.second, c * qpow(sz, e.first) * qpow(sw, e.second));
    return r;
}

std::optional<LaurentPoly2> LaurentPoly2::divide_exact(const LaurentPoly2& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly2 q, r = *this;
    auto [dl, dc] = *d.t_.rbegin();
    // Each step removes the lex-leading term of r; an exact quotient has at most
    // as many steps as (terms of r) * (terms of d) can produce, so cap generously.
    std::size_t budget = (r.size() + 1) * (d.size() + 1) * 64 + 1024;
    while (!r.is_zero()) {
        if (budget-- == 0) return std::nullopt;
        auto [rl, rc] = *r.t_.rbegin();
        LaurentPoly2 m = monomial(rl.first - dl.first, rl.second - dl.second, rc / dc);
        // an exact quotient never has a term below lowest(this) - lowest(d)
        auto lo = t_.begin()->first, dlo = d.t_.begin()->first;
        if (m.t_.begin()->first < Exp{lo.first - dlo.first, lo.second - dlo.second}) return std::nullopt;
        q += m;
        r -= m * d;
    }
    return q;
}

std::vector<LaurentPoly2::Exp> LaurentPoly2::newton_polygon() const {
    std::vector<Exp> pts;
    for (auto& [e, c] : t_) pts.push_back(e);
    if (pts.size() <= 2) return pts;
    auto cross = [](Exp o, Exp a, Exp b) {
        return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
               static_cast<long long>(a.second - o.second) * (b.first - o.first);
    };
    std::vector<Exp> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<std::tuple<int, int, Q>> LaurentPoly2::newton_layout() const {
    std::vector<std::tuple<int, int, Q>> out;
    for (auto& [e, c] : t_) out.emplace_back(e.first, e.second, c);
    return out;
}

std::string LaurentPoly2::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        Q a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = (a == 1) && (e.first != 0 || e.second != 0);
        if (!unit) {
            if (a.get_den() == 1) os << a.get_num().get_str();
            else os << "(" << hdm::to_string(a) << ")";
        }
        auto var = [&](const char* v, int k) {
            if (k == 0) return;
            if (!unit) os << "*";
            os << v;
            if (k != 1) os << "^" << k;
            unit = false;
        };
        var("z", e.first);
        var("w", e.second);
        first = false;
    }
    return os.str();
}

namespace {

// Cofactor expansion by rows with memoized column subsets.
LaurentPoly2 det_subsets(const Matrix<LaurentPoly2>& m) {
    const std::size_t n = m.rows();
    std::vector<LaurentPoly2> dp(std::size_t(1) << n);
    dp[0] = LaurentPoly2(1);
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        std::size_t row = __builtin_popcountll(mask) - 1;
        LaurentPoly2 acc;
        int seen_above = 0;
        for (std::size_t c = n; c-- > 0;) {
            if (!(mask >> c & 1)) continue;
            // sign from the position of c among the chosen columns
            if (!m(row, c).is_zero() && !dp[mask ^ (std::size_t(1) << c)].is_zero()) {
                LaurentPoly2 t = m(row, c) * dp[mask ^ (std::size_t(1) << c)];
                if (seen_above % 2) acc -= t;
                else acc += t;
            }
            ++seen_above;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

}  // namespace

LaurentPoly2 det(const Matrix<LaurentPoly2>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() <= 8) return det_subsets(m);
    return det_bareiss(m, [](const LaurentPoly2& a, const LaurentPoly2& b) {
        auto q = a.divide_exact(b);
        if (!q) throw std::logic_error("Bareiss step not exact");
        return *q;
    });
}

}  // namespace hdm
