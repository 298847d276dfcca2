#include "qseries/series.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace qseries {

IntSeries::IntSeries(int order) {
    if (order < 0) throw QSeriesError("series order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Integer(0));
}

IntSeries make_series(std::vector<Integer>&& c) {
    IntSeries s(0);
    s.coeffs_ = std::move(c);
    return s;
}

IntSeries IntSeries::from_coeffs(std::vector<Integer> values, int order) {
    if (order < 0) throw QSeriesError("series order must be >= 0");
    values.resize(static_cast<size_t>(order) + 1, Integer(0));
    return make_series(std::move(values));
}

const Integer& IntSeries::coefficient(int n) const {
    if (n < 0) throw QSeriesError("negative exponent");
    if (n > order())
        throw OrderExceeded("coefficient of q^" + std::to_string(n) +
                            " requested, series exact only through q^" +
                            std::to_string(order()));
    return coeffs_[static_cast<size_t>(n)];
}

int IntSeries::nonzero_count() const {
    int c = 0;
    for (const Integer& v : coeffs_)
        if (v != 0) ++c;
    return c;
}

IntSeries one(int order) {
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    c[0] = 1;
    return make_series(std::move(c));
}

IntSeries monomial(const Integer& c, int exponent, int order) {
    std::vector<Integer> v(static_cast<size_t>(order) + 1, Integer(0));
    if (exponent <= order) v[static_cast<size_t>(exponent)] = c;
    return make_series(std::move(v));
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return make_series(std::move(c));
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
    return make_series(std::move(c));
}

IntSeries neg(const IntSeries& a) {
    std::vector<Integer> c(a.coeffs());
    for (Integer& v : c) v = -v;
    return make_series(std::move(c));
}

IntSeries scale(const IntSeries& a, const Integer& k) {
    std::vector<Integer> c(a.coeffs());
    for (Integer& v : c) v *= k;
    return make_series(std::move(c));
}

namespace detail {

IntSeries mul_schoolbook(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
    for (int i = 0; i <= n; ++i) {
        const Integer& ai = a.coeffs()[i];
        if (ai == 0) continue;
        int jmax = n - i;
        for (int j = 0; j <= jmax; ++j) {
            const Integer& bj = b.coeffs()[j];
            if (bj == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return make_series(std::move(c));
}

IntSeries mul_sparse(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    // Gather nonzero supports; iterate the sparser operand on the outside.
    std::vector<int> sa, sb;
    for (int i = 0; i <= n; ++i)
        if (a.coeffs()[i] != 0) sa.push_back(i);
    for (int j = 0; j <= n; ++j)
        if (b.coeffs()[j] != 0) sb.push_back(j);
    const bool a_outer = sa.size() <= sb.size();
    const std::vector<int>& outer = a_outer ? sa : sb;
    const std::vector<int>& inner = a_outer ? sb : sa;
    const IntSeries& so = a_outer ? a : b;
    const IntSeries& si = a_outer ? b : a;

    std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
    for (int i : outer) {
        const Integer& oi = so.coeffs()[i];
        int jmax = n - i;
        for (int j : inner) {
            if (j > jmax) break;
            mpz_addmul(c[i + j].get_mpz_t(), oi.get_mpz_t(),
                       si.coeffs()[j].get_mpz_t());
        }
    }
    return make_series(std::move(c));
}

} // namespace detail

IntSeries mul(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    long nz = std::min(a.nonzero_count(), b.nonzero_count());
    // Sparse gather pays off once one operand is mostly zeros.
    if (4 * nz < n + 1) return detail::mul_sparse(a, b);
    return detail::mul_schoolbook(a, b);
}

IntSeries pow(const IntSeries& a, int e) {
    if (e < 0) throw QSeriesError("pow: negative exponent");
    IntSeries result = one(a.order());
    if (e == 0) return result;
    IntSeries base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

IntSeries inverse(const IntSeries& a) {
    const Integer& a0 = a.coeffs()[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm(
            "inverse: constant term must be +1 or -1, got " + a0.get_str());
    int n = a.order();
    std::vector<int> support; // nonzero a_j, j >= 1
    for (int j = 1; j <= n; ++j)
        if (a.coeffs()[j] != 0) support.push_back(j);

    std::vector<Integer> b(static_cast<size_t>(n) + 1, Integer(0));
    b[0] = a0; // a0 is its own inverse
    Integer acc;
    for (int k = 1; k <= n; ++k) {
        acc = 0;
        for (int j : support) {
            if (j > k) break;
            mpz_addmul(acc.get_mpz_t(), a.coeffs()[j].get_mpz_t(),
                       b[k - j].get_mpz_t());
        }
        b[k] = -a0 * acc;
    }
    return make_series(std::move(b));
}

IntSeries substitute_power(const IntSeries& a, int m, int cap) {
    if (m < 1) throw QSeriesError("substitute_power: scale must be >= 1");
    long full = static_cast<long>(m) * (a.order() + 1) - 1;
    long n = (cap >= 0) ? std::min<long>(full, cap) : full;
    std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
    for (int i = 0; static_cast<long>(i) * m <= n; ++i)
        c[static_cast<size_t>(i) * m] = a.coeffs()[i];
    return make_series(std::move(c));
}

IntSeries shift(const IntSeries& a, int k) {
    if (k < 0) throw QSeriesError("shift: negative shift");
    std::vector<Integer> c(a.coeffs().size() + static_cast<size_t>(k), Integer(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i + k] = a.coeffs()[i];
    return make_series(std::move(c));
}

IntSeries dissect(const IntSeries& a, int m, int r) {
    if (m < 1) throw QSeriesError("dissect: modulus must be >= 1");
    if (r < 0 || r >= m)
        throw ResidueOutOfRange("dissect: residue " + std::to_string(r) +
                                " not in [0, " + std::to_string(m) + ")");
    if (r > a.order())
        throw OrderExceeded("dissect: residue " + std::to_string(r) +
                            " exceeds series order " + std::to_string(a.order()));
    int n = (a.order() - r) / m;
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs()[static_cast<size_t>(i) * m + r];
    return make_series(std::move(c));
}

bool eq_upto(const IntSeries& a, const IntSeries& b, int M) {
    if (M > a.order() || M > b.order())
        throw OrderExceeded("eq_upto: order " + std::to_string(M) +
                            " exceeds operand orders");
    for (int i = 0; i <= M; ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
    return true;
}

bool congruent_upto(const IntSeries& a, const IntSeries& b,
                    const Integer& m, int M) {
    if (m < 2) throw QSeriesError("congruent_upto: modulus must be >= 2");
    if (M > a.order() || M > b.order())
        throw OrderExceeded("congruent_upto: order " + std::to_string(M) +
                            " exceeds operand orders");
    Integer d;
    for (int i = 0; i <= M; ++i) {
        d = a.coeffs()[i] - b.coeffs()[i];
        if (d % m != 0) return false;
    }
    return true;
}

// -- cache format --------------------------------------------------------------

void write_series(std::ostream& os, const IntSeries& s, const std::string& name) {
    os << "# qseries v1 name=" << name << " order=" << s.order() << "\n";
    for (int n = 0; n <= s.order(); ++n) {
        const Integer& c = s.coeffs()[n];
        if (c != 0) os << n << '\t' << c.get_str() << '\n';
    }
}

IntSeries read_series(std::istream& is, std::string* name_out) {
    std::string header;
    if (!std::getline(is, header))
        throw QSeriesError("series cache: empty input");
    const std::string magic = "# qseries v1 name=";
    if (header.rfind(magic, 0) != 0)
        throw QSeriesError("series cache: bad header: " + header);
    size_t order_pos = header.rfind(" order=");
    if (order_pos == std::string::npos)
        throw QSeriesError("series cache: header missing order: " + header);
    std::string name = header.substr(magic.size(), order_pos - magic.size());
    int order = std::stoi(header.substr(order_pos + 7));
    if (name_out) *name_out = name;

    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    std::string line;
    long prev = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw QSeriesError("series cache: bad line: " + line);
        long n = std::stol(line.substr(0, tab));
        if (n <= prev || n > order)
            throw QSeriesError("series cache: exponent out of order: " + line);
        prev = n;
        c[static_cast<size_t>(n)] = Integer(line.substr(tab + 1));
    }
    return make_series(std::move(c));
}

void save_series(const std::string& path, const IntSeries& s, const std::string& name) {
    std::ofstream os(path);
    if (!os) throw QSeriesError("cannot open for writing: " + path);
    write_series(os, s, name);
}

IntSeries load_series(const std::string& path, std::string* name_out) {
    std::ifstream is(path);
    if (!is) throw QSeriesError("cannot open for reading: " + path);
    return read_series(is, name_out);
}

} // namespace qseries
