#include "gaborform/eigen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gaborform/error.hpp"

namespace gaborform {

namespace {

constexpr int kMaxSweeps = 100;

}  // namespace

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double Matrix::off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i != j) s += (*this)(i, j) * (*this)(i, j);
        }
    }
    return std::sqrt(s);
}

double Matrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

bool Matrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        }
    }
    return true;
}

Spectrum symmetric_eigenvalues(const Matrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > kMaxEigenDim) {
        throw SizeError("matrix dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxEigenDim));
    }
    if (!(tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");
    if (!m.is_symmetric(1e-12 * std::max(1.0, m.frobenius_norm()))) {
        throw std::invalid_argument("matrix is not symmetric");
    }

    Matrix a = m;
    const double target = tol * m.frobenius_norm();
    Spectrum out;
    double off = a.off_diagonal_norm();
    while (off > target) {
        if (out.sweeps == kMaxSweeps) {
            throw ConvergenceError("Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                                       " sweeps",
                                   off);
        }
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle chosen to annihilate a(p, q), smaller root.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
        off = a.off_diagonal_norm();
    }
    out.offdiag_residual = off;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

Matrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t end = line.find(',', pos);
            if (end == std::string::npos) end = line.size();
            std::size_t b = pos, e = end;
            while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
            while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t')) --e;
            if (b < e && line[b] == '+') ++b;
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(line.data() + b, line.data() + e, v);
            if (b == e || ec != std::errc() || ptr != line.data() + e || !std::isfinite(v)) {
                throw ParseError(line_start + pos, "malformed matrix entry");
            }
            row.push_back(v);
            pos = end + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, "empty matrix");
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw ParseError(offset, "row " + std::to_string(i) + " has " +
                                         std::to_string(rows[i].size()) + " entries, expected " +
                                         std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix parse_matrix_csv(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
    char buf[32];
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.12g", m(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace gaborform
