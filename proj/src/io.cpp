#include "qcss/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcss {

namespace {

std::string format_theta(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void append_header(std::string& out, const Meta& meta, const std::optional<double>& declared) {
    if (declared) out += "declared_theta " + format_theta(*declared) + "\n";
    for (const auto& [k, v] : meta) out += "meta " + k + " " + v + "\n";
    out += "\n";
}

void append_row(std::string& out, const int* exps, int count) {
    for (int t = 0; t < count; ++t) {
        if (t) out += ' ';
        out += std::to_string(exps[t]);
    }
    out += '\n';
}

struct Lines {
    std::vector<std::string> lines;
    size_t pos = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    int lineno() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const { return lines[pos]; }
    std::string next() { return lines[pos++]; }
};

long long parse_int(const std::string& s, int lineno, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(lineno, std::string("invalid integer for ") + what + ": '" + s + "'");
    return v;
}

std::vector<int> parse_exponent_row(const std::string& line, int lineno, int expected, long long order) {
    std::istringstream in(line);
    std::vector<int> row;
    std::string tok;
    while (in >> tok) {
        long long v = parse_int(tok, lineno, "exponent");
        if (v < 0 || v >= order) throw ParseError(lineno, "exponent out of range [0, order)");
        row.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(row.size()) != expected)
        throw ParseError(lineno, "expected " + std::to_string(expected) + " exponents, got " +
                                     std::to_string(row.size()));
    return row;
}

struct Header {
    bool is_matrix = false;
    long long order = 0, period = 0, flock = 0, length = 0, members = 0;
    std::optional<double> declared;
    Meta meta;
};

Header parse_header(Lines& in) {
    Header h;
    if (in.done()) throw ParseError(1, "empty document");
    const std::string tag = in.next();
    if (tag == "QMAT1") h.is_matrix = true;
    else if (tag != "QSEQ1") throw ParseError(1, "unknown format tag '" + tag + "'");

    auto expect_field = [&](const char* name) {
        if (in.done()) throw ParseError(in.lineno(), std::string("missing header field ") + name);
        int ln = in.lineno();
        std::istringstream line(in.next());
        std::string key, value;
        if (!(line >> key >> value) || key != name)
            throw ParseError(ln, std::string("expected header field '") + name + "'");
        long long v = parse_int(value, ln, name);
        if (v < 1) throw ParseError(ln, std::string(name) + " must be >= 1");
        return v;
    };

    h.order = expect_field("order");
    if (h.is_matrix) {
        h.flock = expect_field("flock");
        h.length = expect_field("length");
    } else {
        h.period = expect_field("period");
    }
    h.members = expect_field("members");

    while (!in.done() && !in.peek().empty()) {
        int ln = in.lineno();
        std::istringstream line(in.next());
        std::string key;
        line >> key;
        if (key == "declared_theta") {
            std::string value;
            if (!(line >> value)) throw ParseError(ln, "declared_theta needs a value");
            try {
                h.declared = std::stod(value);
            } catch (...) {
                throw ParseError(ln, "invalid declared_theta value '" + value + "'");
            }
        } else if (key == "meta") {
            std::string mk, mv, extra;
            if (!(line >> mk)) throw ParseError(ln, "meta needs a key");
            std::getline(line, mv);
            size_t start = mv.find_first_not_of(' ');
            mv = start == std::string::npos ? "" : mv.substr(start);
            h.meta.emplace_back(mk, mv);
        } else {
            throw ParseError(ln, "unknown header line '" + key + "'");
        }
    }
    if (in.done()) throw ParseError(in.lineno(), "missing blank line after header");
    in.next();  // blank separator
    return h;
}

}  // namespace

std::string serialize(const SequenceFamily& fam) {
    fam.validate();
    std::string out = "QSEQ1\n";
    out += "order " + std::to_string(fam.order()) + "\n";
    out += "period " + std::to_string(fam.period()) + "\n";
    out += "members " + std::to_string(fam.size()) + "\n";
    append_header(out, fam.meta, fam.declared_theta_max);
    for (int m = 0; m < fam.size(); ++m) {
        if (m) out += '\n';
        append_row(out, fam.members[m].exponents.data(), fam.period());
    }
    return out;
}

std::string serialize(const QcssFamily& fam) {
    fam.validate();
    std::string out = "QMAT1\n";
    out += "order " + std::to_string(fam.order()) + "\n";
    out += "flock " + std::to_string(fam.flock()) + "\n";
    out += "length " + std::to_string(fam.length()) + "\n";
    out += "members " + std::to_string(fam.size()) + "\n";
    append_header(out, fam.meta, fam.declared_vartheta_max);
    for (int m = 0; m < fam.size(); ++m) {
        if (m) out += '\n';
        for (int k = 0; k < fam.flock(); ++k)
            append_row(out, fam.members[m].exponents.data() + static_cast<size_t>(k) * fam.length(),
                       fam.length());
    }
    return out;
}

std::string serialize(const AnyFamily& fam) {
    return std::visit([](const auto& f) { return serialize(f); }, fam);
}

AnyFamily parse(const std::string& text) {
    Lines in(text);
    Header h = parse_header(in);

    auto read_member_rows = [&](int rows, int cols) {
        std::vector<int> grid;
        grid.reserve(static_cast<size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r) {
            if (in.done() || in.peek().empty())
                throw ParseError(in.lineno(), "member has fewer rows than declared");
            int ln = in.lineno();
            auto row = parse_exponent_row(in.next(), ln, cols, h.order);
            grid.insert(grid.end(), row.begin(), row.end());
        }
        return grid;
    };

    auto member_separator = [&](int m) {
        if (m + 1 < h.members) {
            if (in.done() || !in.peek().empty())
                throw ParseError(in.lineno(), "expected blank line between members");
            in.next();
        }
    };

    if (h.is_matrix) {
        QcssFamily fam;
        fam.declared_vartheta_max = h.declared;
        fam.meta = h.meta;
        for (int m = 0; m < h.members; ++m) {
            ComplementaryMatrix mat;
            mat.order = static_cast<int>(h.order);
            mat.flock = static_cast<int>(h.flock);
            mat.length = static_cast<int>(h.length);
            mat.exponents = read_member_rows(static_cast<int>(h.flock), static_cast<int>(h.length));
            fam.members.push_back(std::move(mat));
            member_separator(m);
        }
        while (!in.done()) {
            int ln = in.lineno();
            if (!in.next().empty()) throw ParseError(ln, "trailing content after last member");
        }
        fam.validate();
        return fam;
    }

    SequenceFamily fam;
    fam.declared_theta_max = h.declared;
    fam.meta = h.meta;
    for (int m = 0; m < h.members; ++m) {
        PhaseExponentSequence seq;
        seq.order = static_cast<int>(h.order);
        seq.exponents = read_member_rows(1, static_cast<int>(h.period));
        fam.members.push_back(std::move(seq));
        member_separator(m);
    }
    while (!in.done()) {
        int ln = in.lineno();
        if (!in.next().empty()) throw ParseError(ln, "trailing content after last member");
    }
    fam.validate();
    return fam;
}

AnyFamily load_family(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse(buf.str());
}

void save_family(const AnyFamily& fam, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << serialize(fam);
}

}  // namespace qcss
