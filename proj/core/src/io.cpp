#include "hpc/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hpc/constructions.hpp"
#include "hpc/errors.hpp"

namespace hpc {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                       static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    os.write(b, 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) throw IoError("truncated RLE record");
    return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
           static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

}  // namespace

void write_coloring(std::ostream& os, const Coloring& c, FileMode mode, std::uint64_t budget) {
    const auto& s = c.shape();
    os << "HPC1 " << s.n << ' ' << s.q << ' ' << c.colors() << ' ';
    if (mode == FileMode::recipe) {
        if (!c.recipe()) throw ParameterError("coloring has no recipe; write it in DENSE mode");
        os << "RECIPE\n" << to_pretty(*c.recipe()) << '\n';
        if (!os) throw IoError("write failed");
        return;
    }
    const Coloring m = c.has_dense() ? c : materialize(c, budget);
    const auto table = m.dense();
    if (mode == FileMode::dense) {
        os << "DENSE\n";
        os.write(reinterpret_cast<const char*>(table.data()), static_cast<std::streamsize>(table.size()));
    } else {
        os << "DENSE RLE\n";
        std::size_t i = 0;
        while (i < table.size()) {
            std::size_t j = i;
            while (j < table.size() && table[j] == table[i] && j - i < 0xffffffffu) ++j;
            put_u32(os, static_cast<std::uint32_t>(j - i));
            os.put(static_cast<char>(table[i]));
            i = j;
        }
    }
    if (!os) throw IoError("write failed");
}

Coloring read_coloring(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty coloring file");
    std::istringstream hs(line);
    std::string magic, mode, flag;
    long n = -1, q = -1, k = -1;
    if (!(hs >> magic >> n >> q >> k >> mode) || magic != "HPC1")
        throw IoError("bad header, expected `HPC1 <n> <q> <k> <mode>`");
    hs >> flag;
    if (n < 0 || n > 4096 || q < 2 || q > kMaxAlphabet || k < 1 || k > 255) throw IoError("header values out of range");
    const GraphShape shape(static_cast<int>(n), static_cast<int>(q));

    if (mode == "RECIPE") {
        std::stringstream rest;
        rest << is.rdbuf();
        auto r = parse_recipe(rest.str());
        const auto info = analyze(*r);
        if (info.shape.n != shape.n || info.shape.q != shape.q || info.quotient.k() != k)
            throw IoError("recipe describes H(" + std::to_string(info.shape.n) + "," + std::to_string(info.shape.q) +
                          ") with " + std::to_string(info.quotient.k()) + " colors, header disagrees");
        return build(r);
    }
    if (mode != "DENSE") throw IoError("unknown mode " + mode);
    if (!shape.fits_u64()) throw IoError("dense payload too large");
    const auto total = shape.size();
    std::vector<Color> table;
    table.reserve(total);
    if (flag.empty()) {
        table.resize(total);
        if (!is.read(reinterpret_cast<char*>(table.data()), static_cast<std::streamsize>(total)))
            throw IoError("truncated DENSE payload: expected " + std::to_string(total) + " bytes");
    } else if (flag == "RLE") {
        while (table.size() < total) {
            const auto run = get_u32(is);
            const int color = is.get();
            if (color == EOF) throw IoError("truncated RLE record");
            if (run == 0 || table.size() + run > total) throw IoError("RLE runs do not add up to q^n");
            table.insert(table.end(), run, static_cast<Color>(color));
        }
    } else {
        throw IoError("unknown DENSE flag " + flag);
    }
    if (is.peek() != EOF) throw IoError("trailing bytes after payload");
    try {
        return from_dense(shape, static_cast<int>(k), std::move(table));
    } catch (const ParameterError& e) {
        throw IoError(e.what());
    }
}

void save_coloring(const std::filesystem::path& path, const Coloring& c, FileMode mode, std::uint64_t budget) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    write_coloring(os, c, mode, budget);
}

Coloring load_coloring(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path.string());
    return read_coloring(is);
}

QuotientMatrix parse_matrix(const std::string& text) {
    std::string clean = text;
    for (char& ch : clean)
        if (ch == '[' || ch == ']' || ch == ',' || ch == ';') ch = ' ';
    std::istringstream in(clean);
    std::vector<std::int64_t> v;
    std::int64_t x;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw IoError("matrix: non-numeric entry");
    const auto k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
    if (k < 1 || static_cast<std::size_t>(k * k) != v.size())
        throw IoError("matrix: " + std::to_string(v.size()) + " entries is not a square count");
    return QuotientMatrix(k, std::move(v));
}

std::string format_matrix(const QuotientMatrix& m) { return to_string(m); }

std::string format_verify(const VerifyReport& rep) {
    std::ostringstream os;
    os << "mode: " << (rep.mode == VerifyReport::Mode::full ? "full" : "sampled");
    if (rep.mode == VerifyReport::Mode::sampled) os << " (samples " << rep.samples << ", seed " << rep.seed << ")";
    os << "\nchecked: " << rep.checked << " vertices\nmatrix: " << to_string(rep.matrix) << '\n';
    if (rep.pass()) {
        os << "verdict: pass\n";
        return os.str();
    }
    os << "verdict: FAIL\n";
    for (const auto& v : rep.violations) {
        os << "violation at rank " << v.rank << " vertex " << to_string(v.vertex) << " color " << int(v.color)
           << ": expected";
        for (auto e : v.expected) os << ' ' << e;
        os << ", observed";
        for (auto e : v.observed) os << ' ' << e;
        os << '\n';
    }
    return os.str();
}

std::string format_lower_bound(int q, int b, int c, const LowerBound& lb) {
    std::ostringstream os;
    os << "q=" << q << " (b,c)=(" << b << ',' << c << ")\n";
    if (!lb.admissible) {
        os << "inadmissible: " << lb.inadmissible_reason << '\n';
        return os.str();
    }
    for (const auto& r : lb.reasons) {
        const char* name = r.kind == ReasonKind::degree         ? "degree"
                           : r.kind == ReasonKind::divisibility ? "divisibility"
                           : r.kind == ReasonKind::fdf          ? "fdf"
                                                                : "exception";
        os << "  " << name << ": n >= " << r.value << "  (" << r.detail << ")\n";
    }
    os << "LB: " << lb.value << '\n';
    return os.str();
}

std::string format_distribution(const WeightDistribution& w) {
    std::ostringstream os;
    for (int l = 0; l < w.colors(); ++l) {
        os << "color " << l + 1 << ":";
        for (const auto& x : w.W[static_cast<std::size_t>(l)]) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

}  // namespace hpc
