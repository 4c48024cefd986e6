#include "csnet/core/matrix_io.hpp"

#include "csnet/core/error.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace csnet {

Matrix read_matrix(std::istream& in) {
    Index rows = 0;
    Index cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        fail(ErrorKind::InvalidParameter, "read_matrix: bad header, expected 'rows cols'");
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if (!(in >> m(i, j))) fail(ErrorKind::InvalidParameter, "read_matrix: truncated data");
    return m;
}

Matrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidParameter, "read_matrix: cannot open " + path.string());
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[32];
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidParameter, "write_matrix: cannot open " + path.string());
    write_matrix(out, m);
}

Matrix read_mask(const std::filesystem::path& path) {
    Matrix m = read_matrix(path);
    for (Index i = 0; i < m.size(); ++i) {
        const double v = m.data()[i];
        if (v != 0.0 && v != 1.0) fail(ErrorKind::InvalidParameter, "read_mask: entries must be 0 or 1");
    }
    return m;
}

}  // namespace csnet
