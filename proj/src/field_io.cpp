#include "sim/field_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace sim {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void save_field(const Field& f, double t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write field snapshot: " + path.string());
    out << f.grid.nx << ' ' << f.grid.ny << ' ' << format_double(f.grid.lx) << ' '
        << format_double(f.grid.ly) << ' ' << format_double(t) << '\n';
    for (int j = 0; j < f.grid.ny; ++j) {
        for (int i = 0; i < f.grid.nx; ++i) {
            if (i) out << ' ';
            out << format_double(f(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

double parse_double_token(const std::string& tok, const std::filesystem::path& path) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::runtime_error("bad numeric token '" + tok + "' in " + path.string());
    return v;
}

} // namespace

LoadedField load_field(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read field snapshot: " + path.string());
    int nx = 0, ny = 0;
    std::string slx, sly, st;
    in >> nx >> ny >> slx >> sly >> st;
    if (!in) throw std::runtime_error("bad snapshot header in " + path.string());
    LoadedField lf;
    lf.t = parse_double_token(st, path);
    lf.field = Field(Grid(nx, ny, parse_double_token(slx, path), parse_double_token(sly, path)));
    std::string tok;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            if (!(in >> tok))
                throw std::runtime_error("snapshot truncated: " + path.string());
            lf.field(i, j) = parse_double_token(tok, path);
        }
    return lf;
}

} // namespace sim
