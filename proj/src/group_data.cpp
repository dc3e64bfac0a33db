#include "ade/group_data.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ade/errors.hpp"

namespace ade {

namespace {

// Recursive-descent parser for cyclotomic expressions over w = zeta_order.
struct CycloParser {
    const std::string& s;
    size_t pos = 0;
    int order;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Cyclo expr() {
        Cyclo v = term();
        while (true) {
            skip();
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Cyclo term() {
        Cyclo v = factor();
        while (true) {
            skip();
            if (eat('*')) v *= factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }
    Cyclo factor() {
        skip();
        if (eat('-')) return -factor();
        Cyclo base = atom();
        skip();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            Cyclo r(rat(1));
            for (long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }
    Cyclo atom() {
        skip();
        if (eat('(')) {
            Cyclo v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return Cyclo::zeta(order);
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            return Cyclo(rat(integer()));
        }
        fail("expected atom");
    }
    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// SU(2) matrix of the unit quaternion w + x i + y j + z k.
Mat2 quat_matrix(const Cyclo& w, const Cyclo& x, const Cyclo& y, const Cyclo& z, int field) {
    if (field % 4 != 0) throw ValidationError("quaternion matrices need 4 | field order");
    Cyclo i = Cyclo::zeta(field, field / 4);
    Mat2 m;
    m.e[0] = (w + x * i).promoted(field);
    m.e[1] = (y + z * i).promoted(field);
    m.e[2] = (-y + z * i).promoted(field);
    m.e[3] = (w - x * i).promoted(field);
    return m;
}

}  // namespace

Cyclo parse_cyclo(const std::string& text, int order) {
    CycloParser p{text, 0, order};
    Cyclo v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v.promoted(order);
}

Mat2 eval_word(const std::string& word,
               const std::vector<std::pair<std::string, Mat2>>& generators, int field) {
    Mat2 m = Mat2::identity();
    for (int i = 0; i < 4; ++i) m.e[i] = m.e[i].promoted(field);
    std::string w = word;
    bool negate = false;
    size_t pos = 0;
    while (pos < w.size() && std::isspace(static_cast<unsigned char>(w[pos]))) ++pos;
    if (pos < w.size() && w[pos] == '-') {
        negate = true;
        ++pos;
    }
    std::string rest = w.substr(pos);
    if (rest != "1") {
        std::istringstream is(rest);
        std::string factor;
        while (std::getline(is, factor, '*')) {
            // trim
            size_t a = factor.find_first_not_of(" \t");
            size_t b = factor.find_last_not_of(" \t");
            if (a == std::string::npos) throw ParseError("empty factor in word '" + word + "'");
            factor = factor.substr(a, b - a + 1);
            std::string name = factor;
            long power = 1;
            size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                name = factor.substr(0, caret);
                power = std::stol(factor.substr(caret + 1));
            }
            const Mat2* gen = nullptr;
            for (const auto& [gname, gm] : generators)
                if (gname == name) gen = &gm;
            if (!gen) throw ParseError("unknown generator '" + name + "' in word '" + word + "'");
            Mat2 g = *gen;
            if (power < 0) {
                g = g.inverse_det1();
                power = -power;
            }
            for (long k = 0; k < power; ++k) m = m * g;
        }
    }
    if (negate)
        for (int i = 0; i < 4; ++i) m.e[i] = -m.e[i];
    for (int i = 0; i < 4; ++i) m.e[i] = m.e[i].promoted(field);
    return m;
}

ADEGroup::BuildInput load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open group data file " + path);
    ADEGroup::BuildInput b;
    std::string line;
    int lineno = 0;
    bool have_format = false;
    int char_field = 1;
    std::vector<std::string> pending_class_order;
    auto err = [&](const std::string& why) -> std::runtime_error {
        return ParseError(path + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "format") {
            if (toks.size() != 3 || toks[1] != "adegroup" || toks[2] != "1")
                throw err("expected 'format adegroup 1'");
            have_format = true;
        } else if (kw == "group") {
            if (toks.size() != 2) throw err("group needs a name");
            b.spec = GroupSpec::parse(toks[1]);
        } else if (kw == "order") {
            b.order = std::stol(toks.at(1));
        } else if (kw == "field") {
            b.matrix_field = std::stoi(toks.at(1));
        } else if (kw == "charfield") {
            char_field = std::stoi(toks.at(1));
        } else if (kw == "generator") {
            // generator <name> quat <w> <x> <y> <z>
            if (toks.size() != 7 || toks[2] != "quat") throw err("generator <name> quat w x y z");
            Cyclo qw = parse_cyclo(toks[3], b.matrix_field);
            Cyclo qx = parse_cyclo(toks[4], b.matrix_field);
            Cyclo qy = parse_cyclo(toks[5], b.matrix_field);
            Cyclo qz = parse_cyclo(toks[6], b.matrix_field);
            Mat2 m = quat_matrix(qw, qx, qy, qz, b.matrix_field);
            b.generators.emplace_back(toks[1], m);
        } else if (kw == "relation") {
            // relation <word> = <word>
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
            size_t eq = rest.find('=');
            if (eq == std::string::npos) throw err("relation needs '='");
            std::string lhs = rest.substr(0, eq), rhs = rest.substr(eq + 1);
            auto strip = [](std::string s) {
                size_t a = s.find_first_not_of(" \t");
                size_t z = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
            };
            b.relations.emplace_back(strip(lhs), strip(rhs));
        } else if (kw == "class") {
            // class <label> : <word>
            if (toks.size() != 4 || toks[2] != ":") throw err("class <label> : <word>");
            b.class_labels.emplace_back(toks[1], toks[3]);
            pending_class_order.push_back(toks[1]);
        } else if (kw == "alias") {
            if (toks.size() != 3) throw err("alias <name> <label>");
            b.aliases.emplace_back(toks[1], toks[2]);
        } else if (kw == "irrep") {
            if (toks.size() != 3) throw err("irrep <name> <dim>");
            b.chartable.irreps.push_back({toks[1], std::stoi(toks[2])});
        } else if (kw == "char") {
            // char <irrep name> : v1 v2 ... (class order = declaration order)
            if (toks.size() < 3 || toks[2] != ":") throw err("char <irrep> : values...");
            if (b.chartable.values.size() >= b.chartable.irreps.size())
                throw err("more char rows than irreps");
            const std::string& expect = b.chartable.irreps[b.chartable.values.size()].name;
            if (toks[1] != expect) throw err("char rows must follow irrep order; expected " + expect);
            if (toks.size() - 3 != pending_class_order.size())
                throw err("char row length != class count");
            std::vector<Cyclo> row;
            for (size_t i = 3; i < toks.size(); ++i) row.push_back(parse_cyclo(toks[i], char_field));
            b.chartable.values.push_back(std::move(row));
        } else {
            throw err("unknown keyword '" + kw + "'");
        }
    }
    if (!have_format) throw ValidationError(path + ": missing format line");
    b.chartable.field = char_field;
    if (b.chartable.values.size() != b.chartable.irreps.size())
        throw ValidationError(path + ": missing char rows");
    return b;
}

ADEGroup::BuildInput make_type_a_input(int n) {
    if (n < 1) throw InvalidParameter("A_n needs n >= 1");
    const int m = n + 1;
    ADEGroup::BuildInput b;
    b.spec = {GroupKind::A, n};
    b.order = m;
    b.matrix_field = m;
    Mat2 a;
    a.e = {Cyclo::zeta(m, 1), Cyclo(), Cyclo(), Cyclo::zeta(m, m - 1)};
    b.generators.emplace_back("a", a);
    b.relations.emplace_back("a^" + std::to_string(m), "1");
    b.class_labels.emplace_back("1", "1");
    for (int k = 1; k < m; ++k)
        b.class_labels.emplace_back(k == 1 ? "a" : "a^" + std::to_string(k),
                                    k == 1 ? "a" : "a^" + std::to_string(k));
    if (m % 2 == 0) b.aliases.emplace_back("-1", m / 2 == 1 ? "a" : "a^" + std::to_string(m / 2));
    b.chartable.field = m;
    for (int j = 0; j < m; ++j) {
        b.chartable.irreps.push_back({"chi" + std::to_string(j), 1});
        std::vector<Cyclo> row;
        for (int k = 0; k < m; ++k) row.push_back(Cyclo::zeta(m, static_cast<long>(j) * k));
        b.chartable.values.push_back(std::move(row));
    }
    return b;
}

ADEGroup::BuildInput make_type_d_input(int n) {
    if (n < 4) throw InvalidParameter("D_n needs n >= 4");
    const int m = n - 2;          // binary dihedral over the 2m-gon, |G| = 4m
    const int mf = std::lcm(4, 2 * m);
    ADEGroup::BuildInput b;
    b.spec = {GroupKind::D, n};
    b.order = 4L * m;
    b.matrix_field = mf;
    Mat2 a, bb;
    a.e = {Cyclo::zeta(2 * m, 1), Cyclo(), Cyclo(), Cyclo::zeta(2 * m, 2 * m - 1)};
    bb.e = {Cyclo(), Cyclo(rat(1)), Cyclo(rat(-1)), Cyclo()};
    b.generators.emplace_back("a", a);
    b.generators.emplace_back("b", bb);
    b.relations.emplace_back("b^2", "a^" + std::to_string(m));
    b.relations.emplace_back("b*a*b^-1", "a^-1");
    b.relations.emplace_back("a^" + std::to_string(2 * m), "1");
    b.class_labels.emplace_back("1", "1");
    for (int k = 1; k <= m - 1; ++k)
        b.class_labels.emplace_back(k == 1 ? "a" : "a^" + std::to_string(k),
                                    k == 1 ? "a" : "a^" + std::to_string(k));
    b.class_labels.emplace_back("a^" + std::to_string(m), "a^" + std::to_string(m));
    b.class_labels.emplace_back("b", "b");
    b.class_labels.emplace_back("ab", "a*b");
    b.aliases.emplace_back("-1", "a^" + std::to_string(m));

    // Character table: four 1-dim irreps (parity-dependent) and the 2-dim
    // representations rho_l, l = 1..m-1.
    b.chartable.field = mf;
    const int ncls = m + 3;
    auto at_classes = [&](auto value_of) {
        // class order: 1, a, .., a^{m-1}, a^m, b, ab
        std::vector<Cyclo> row;
        for (int k = 0; k <= m; ++k) row.push_back(value_of(k, -1));
        row.push_back(value_of(-1, 0));  // b
        row.push_back(value_of(-1, 1));  // ab
        return row;
    };
    if (m % 2 == 0) {
        // abelianization Z2 x Z2: a -> ea, b -> eb
        const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (int v = 0; v < 4; ++v) {
            b.chartable.irreps.push_back({"chi1_" + std::to_string(v), 1});
            int ea = signs[v][0], eb = signs[v][1];
            b.chartable.values.push_back(at_classes([&](int apow, int bkind) {
                if (bkind < 0) return Cyclo(rat(apow % 2 == 0 ? 1 : ea));
                if (bkind == 0) return Cyclo(rat(eb));
                return Cyclo(rat(ea * eb));
            }));
        }
    } else {
        // abelianization Z4 generated by the image of b; a -> b^2
        for (int j = 0; j < 4; ++j) {
            b.chartable.irreps.push_back({"chi1_" + std::to_string(j), 1});
            b.chartable.values.push_back(at_classes([&](int apow, int bkind) {
                Cyclo i4 = Cyclo::zeta(4, j);
                if (bkind < 0) {
                    // a^apow -> (-1)^(j apow)
                    return Cyclo(rat((j * apow) % 2 == 0 ? 1 : -1));
                }
                if (bkind == 0) return i4;
                // ab -> (-1)^j i^j
                return j % 2 == 0 ? i4 : -i4;
            }));
        }
    }
    for (int l = 1; l <= m - 1; ++l) {
        b.chartable.irreps.push_back({"rho" + std::to_string(l), 2});
        b.chartable.values.push_back(at_classes([&](int apow, int bkind) {
            if (bkind >= 0) return Cyclo();
            return Cyclo::zeta(2 * m, static_cast<long>(l) * apow) +
                   Cyclo::zeta(2 * m, -static_cast<long>(l) * apow);
        }));
    }
    (void)ncls;
    return b;
}

}  // namespace ade
