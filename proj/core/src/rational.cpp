#include "hdm/rational.hpp"

#include <cctype>

namespace hdm {

std::string to_string(const Q& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_int_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    if (!is_int_literal(s)) throw ParseError("bad integer literal '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Q parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class p = parse_int(s.substr(0, slash));
        mpz_class q = parse_int(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        Q r(p, q);
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        mpz_class a = parse_int(ip), b = parse_int(fp);
        if (fp[0] == '-' || fp[0] == '+') throw ParseError("bad decimal '" + std::string(s) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        Q r(a * scale + b, scale);
        r.canonicalize();
        return neg ? Q(-r) : r;
    }
    return Q(parse_int(s));
}

}  // namespace hdm

#include "hdm/matrix.hpp"

namespace hdm {

Q det(const QMatrix& m) {
    return det_bareiss(m, [](const Q& a, const Q& b) { return Q(a / b); });
}

namespace {

// Row reduction to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Q inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
    QMatrix t = m;
    return rref(t).size();
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.rows();
    if (n != a.cols() || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
    QMatrix aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("singular matrix");
    QMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

QMatrix inverse(const QMatrix& m) { return solve(m, QMatrix::identity(m.rows())); }

QMatrix parse_qmatrix_rows(const std::vector<std::vector<std::string>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw ParseError("ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

}  // namespace hdm
