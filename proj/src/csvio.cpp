#include "emis2d/contrast.hpp"
#include "emis2d/errors.hpp"
#include "emis2d/fields.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace emis {

namespace {

std::vector<double> parse_csv_line(const std::string& line, const std::string& path,
                                   int lineno) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": not a number: '" + tok + "'");
        }
    }
    return out;
}

void write_matrix(const Eigen::MatrixXd& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot open for writing: " + path);
    char buf[32];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            f << buf << (j + 1 < m.cols() ? "," : "");
        }
        f << "\n";
    }
}

Eigen::MatrixXd read_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        rows.push_back(parse_csv_line(line, path, lineno));
        if (rows.size() > 1 && rows.back().size() != rows.front().size())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": inconsistent column count");
    }
    if (rows.empty()) throw DataError(path + ": empty file");
    Eigen::MatrixXd m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

void save_contrast_csv(const ContrastMap& map, const std::string& stem) {
    const int m = map.grid_m;
    Eigen::MatrixXd re(m, m), im(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            re(i, j) = map.at(i, j).real();
            im(i, j) = map.at(i, j).imag();
        }
    write_matrix(re, stem + "_re.csv");
    write_matrix(im, stem + "_im.csv");
}

ContrastMap load_contrast_csv(const std::string& stem) {
    const Eigen::MatrixXd re = read_matrix(stem + "_re.csv");
    const Eigen::MatrixXd im = read_matrix(stem + "_im.csv");
    if (re.rows() != re.cols() || re.rows() != im.rows() || re.cols() != im.cols())
        throw DataError(stem + ": real/imaginary grids disagree or are not square");
    ContrastMap map(static_cast<int>(re.rows()));
    for (int i = 0; i < map.grid_m; ++i)
        for (int j = 0; j < map.grid_m; ++j)
            map.at(i, j) = {re(i, j), im(i, j)};
    return map;
}

void save_field_csv(const FieldMatrix& fields, const std::string& path) {
    const auto& v = fields.values;
    Eigen::MatrixXd flat(v.rows(), 2 * v.cols());
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            flat(i, 2 * j) = v(i, j).real();
            flat(i, 2 * j + 1) = v(i, j).imag();
        }
    write_matrix(flat, path);
}

FieldMatrix load_field_csv(const std::string& path, FieldKind kind) {
    const Eigen::MatrixXd flat = read_matrix(path);
    if (flat.cols() % 2 != 0)
        throw DataError(path + ": odd column count, expected re,im pairs");
    Eigen::MatrixXcd v(flat.rows(), flat.cols() / 2);
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j)
            v(i, j) = {flat(i, 2 * j), flat(i, 2 * j + 1)};
    return FieldMatrix(kind, std::move(v));
}

} // namespace emis
