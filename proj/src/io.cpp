#include "pglab/io.hpp"

#include <fstream>
#include <sstream>

namespace pglab {

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

long long parse_int(const std::string& tok, int lineno, const std::string& what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        fail(lineno, "expected an integer for " + what + ", got \"" + tok + "\"");
    }
    if (pos != tok.size()) fail(lineno, "trailing characters after " + what + " in \"" + tok + "\"");
    return v;
}

/// Expects "key=value"; returns the value part.
std::string keyed(const std::string& tok, const std::string& key, int lineno) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0) fail(lineno, "expected " + prefix + "..., got \"" + tok + "\"");
    return tok.substr(prefix.size());
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

struct Header {
    int p = 0, h = 0, k = 0;
    std::vector<int> modulus;
};

/// Parses the magic line and the parameter line shared by both formats.
Header read_header(std::istream& in, const std::string& magic, bool with_k, int& lineno) {
    std::string line;
    if (!std::getline(in, line)) fail(1, "missing header");
    lineno = 1;
    if (rstrip(line) != magic) fail(1, "expected \"" + magic + "\"");
    if (!std::getline(in, line)) fail(2, "missing parameter line");
    lineno = 2;
    std::vector<std::string> toks = split_ws(line);
    const std::size_t want = with_k ? 4 : 3;
    if (toks.size() != want)
        fail(2, "expected " + std::to_string(want) + " fields p= h= modulus=" +
                    (with_k ? " k=" : "") + ", got " + std::to_string(toks.size()));
    Header hd;
    hd.p = static_cast<int>(parse_int(keyed(toks[0], "p", 2), 2, "p"));
    hd.h = static_cast<int>(parse_int(keyed(toks[1], "h", 2), 2, "h"));
    hd.modulus = parse_modulus(keyed(toks[2], "modulus", 2));
    if (with_k) hd.k = static_cast<int>(parse_int(keyed(toks[3], "k", 2), 2, "k"));
    return hd;
}

std::unique_ptr<Plane> make_plane(const Header& hd, int lineno) {
    try {
        return std::make_unique<Plane>(Field::make(hd.p, hd.h, hd.modulus));
    } catch (const std::exception& e) {
        fail(lineno, std::string("invalid field parameters: ") + e.what());
    }
}

/// One "x0 x1 x2 value" row; coordinates must be valid encodings.
struct Row {
    std::uint32_t point;
    int value;  // reduced to [0, p)
};

bool read_row(const std::string& line, const Plane& pl, int lineno, Row& out) {
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) return false;
    if (toks.size() != 4)
        fail(lineno, "expected 4 fields \"x0 x1 x2 value\", got " + std::to_string(toks.size()));
    Triple t;
    for (int i = 0; i < 3; ++i) {
        long long c = parse_int(toks[i], lineno, "coordinate");
        if (c < 0 || c >= pl.q())
            fail(lineno, "coordinate " + std::to_string(c) + " outside [0, " +
                             std::to_string(pl.q()) + ")");
        t[i] = static_cast<Fel>(c);
    }
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) fail(lineno, "zero triple is not a point");
    long long v = parse_int(toks[3], lineno, "value");
    const int p = pl.p();
    out.point = pl.point_index(pl.normalize_point(t));
    out.value = static_cast<int>(((v % p) + p) % p);
    return true;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return in;
}

void write_params(std::ostream& out, const Field& f) {
    out << "p=" << f.p() << " h=" << f.h() << " modulus=" << f.modulus_string();
}

} // namespace

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> mod;
    if (text.empty()) return mod;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.empty()) throw ParseError("empty coefficient in modulus \"" + text + "\"");
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(part, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad modulus coefficient \"" + part + "\"");
        }
        if (pos != part.size()) throw ParseError("bad modulus coefficient \"" + part + "\"");
        mod.push_back(v);
    }
    if (text.back() == ',') throw ParseError("trailing comma in modulus \"" + text + "\"");
    return mod;
}

std::string modulus_text(const std::vector<int>& mod) {
    std::ostringstream os;
    for (std::size_t i = 0; i < mod.size(); ++i) {
        if (i) os << ',';
        os << mod[i];
    }
    return os.str();
}

LoadedMultiset read_multiset(std::istream& in) {
    int lineno = 0;
    Header hd = read_header(in, "pg-multiset v1", true, lineno);
    std::unique_ptr<Plane> plane = make_plane(hd, lineno);
    Plane& pl = *plane;
    const int p = pl.p();
    LoadedMultiset out{std::move(plane), WeightedMultiset(pl), ((hd.k % p) + p) % p};
    std::string line;
    Row row{};
    while (std::getline(in, line)) {
        ++lineno;
        if (read_row(line, pl, lineno, row)) out.m.add_weight(row.point, row.value);
    }
    return out;
}

LoadedMultiset read_multiset_file(const std::string& path) {
    std::ifstream in = open_in(path);
    try {
        return read_multiset(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_multiset(std::ostream& out, const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    out << "pg-multiset v1\n";
    write_params(out, pl.field());
    out << " k=" << k << "\n";
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        if (!m.w[i]) continue;
        const Triple& t = pl.point(i).c;
        out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << static_cast<int>(m.w[i]) << "\n";
    }
}

void write_multiset_file(const std::string& path, const WeightedMultiset& m, int k) {
    std::ofstream out = open_out(path);
    write_multiset(out, m, k);
    if (!out) throw std::runtime_error(path + ": write failed");
}

LoadedCodeword read_codeword(std::istream& in) {
    int lineno = 0;
    Header hd = read_header(in, "pg-codeword v1", false, lineno);
    std::unique_ptr<Plane> plane = make_plane(hd, lineno);
    Plane& pl = *plane;
    LoadedCodeword out{std::move(plane), Codeword(pl)};
    const int p = pl.p();
    std::string line;
    Row row{};
    while (std::getline(in, line)) {
        ++lineno;
        if (read_row(line, pl, lineno, row))
            out.c.v[row.point] = static_cast<std::uint8_t>((out.c.v[row.point] + row.value) % p);
    }
    return out;
}

LoadedCodeword read_codeword_file(const std::string& path) {
    std::ifstream in = open_in(path);
    try {
        return read_codeword(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_codeword(std::ostream& out, const Codeword& c) {
    const Plane& pl = *c.plane;
    out << "pg-codeword v1\n";
    write_params(out, pl.field());
    out << "\n";
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        if (!c.v[i]) continue;
        const Triple& t = pl.point(i).c;
        out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << static_cast<int>(c.v[i]) << "\n";
    }
}

void write_codeword_file(const std::string& path, const Codeword& c) {
    std::ofstream out = open_out(path);
    write_codeword(out, c);
    if (!out) throw std::runtime_error(path + ": write failed");
}

void write_codeword_dense(std::ostream& out, const Codeword& c) {
    const Plane& pl = *c.plane;
    out << "pg-codeword v1\n";
    write_params(out, pl.field());
    out << "\n";
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        const Triple& t = pl.point(i).c;
        out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << static_cast<int>(c.v[i]) << "\n";
    }
}

} // namespace pglab
