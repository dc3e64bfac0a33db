#include "ade/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ade/errors.hpp"
#include "ade/group_data.hpp"

namespace ade {

std::string GroupSpec::name() const {
    switch (kind) {
        case GroupKind::A: return "A" + std::to_string(n);
        case GroupKind::D: return "D" + std::to_string(n);
        case GroupKind::E6: return "E6";
        case GroupKind::E7: return "E7";
        case GroupKind::E8: return "E8";
    }
    return "?";
}

long GroupSpec::order() const {
    switch (kind) {
        case GroupKind::A: return n + 1;
        case GroupKind::D: return 4L * n - 8;
        case GroupKind::E6: return 24;
        case GroupKind::E7: return 48;
        case GroupKind::E8: return 120;
    }
    return 0;
}

GroupSpec GroupSpec::parse(const std::string& s) {
    if (s == "E6") return {GroupKind::E6, 0};
    if (s == "E7") return {GroupKind::E7, 0};
    if (s == "E8") return {GroupKind::E8, 0};
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
        int n = 0;
        try {
            n = std::stoi(s.substr(1));
        } catch (...) {
            throw InvalidParameter("bad group name: " + s);
        }
        if (s[0] == 'A') {
            if (n < 1) throw InvalidParameter("A_n needs n >= 1");
            return {GroupKind::A, n};
        }
        if (n < 4) throw InvalidParameter("D_n needs n >= 4");
        return {GroupKind::D, n};
    }
    throw InvalidParameter("bad group name: " + s);
}

Mat2 Mat2::identity() {
    Mat2 m;
    m.e = {Cyclo(rat(1)), Cyclo(), Cyclo(), Cyclo(rat(1))};
    return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return r;
}

Cyclo Mat2::det() const { return e[0] * e[3] - e[1] * e[2]; }

Mat2 Mat2::inverse_det1() const {
    Mat2 r;
    r.e[0] = e[3];
    r.e[1] = -e[1];
    r.e[2] = -e[2];
    r.e[3] = e[0];
    return r;
}

std::string Mat2::key() const {
    std::ostringstream os;
    for (const Cyclo& c : e) {
        os << c.order() << "|";
        for (const Rat& x : c.coeffs()) os << x.get_str() << ",";
        os << ";";
    }
    return os.str();
}

int CharacterTable::trivial_index() const {
    for (size_t i = 0; i < irreps.size(); ++i) {
        bool all_one = true;
        for (const Cyclo& v : values[i])
            if (v != Cyclo(rat(1))) { all_one = false; break; }
        if (all_one) return static_cast<int>(i);
    }
    throw ValidationError("character table has no trivial row");
}

namespace {

// Age fraction of a class representative: the k/m with eigenvalues
// zeta_m^{+-k} in the defining representation, read off from order + trace.
Rat age_from_order_and_trace(int order, const Cyclo& trace) {
    for (int k = 0; 2 * k <= order; ++k) {
        Cyclo expected = Cyclo::zeta(order, k) + Cyclo::zeta(order, order - k);
        if (k == 0) expected = Cyclo(rat(2));
        if (trace == expected) {
            if (k == 0) return Rat(0);
            return rat(k, order);
        }
    }
    throw ValidationError("no eigenvalue pair matches trace " + trace.to_string());
}

}  // namespace

void ADEGroup::finish_build(const BuildInput& input) {
    spec_ = input.spec;
    matrix_field_ = input.matrix_field;

    // All entries live in one field so interning keys are canonical.
    auto normalize = [&](const Mat2& m) {
        Mat2 r;
        for (int i = 0; i < 4; ++i) r.e[i] = m.e[i].promoted(matrix_field_);
        return r;
    };
    std::vector<std::pair<std::string, Mat2>> gens;
    for (const auto& [name, g] : input.generators) gens.emplace_back(name, normalize(g));

    // Closure from the generators.
    std::map<std::string, int> index;
    elements_.clear();
    auto intern = [&](const Mat2& m) {
        std::string k = m.key();
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(elements_.size());
        elements_.push_back(m);
        index.emplace(std::move(k), id);
        return id;
    };
    identity_ = intern(normalize(Mat2::identity()));
    for (const auto& [name, g] : gens) {
        if (g.det() != Cyclo(rat(1)))
            throw ValidationError("generator " + name + " has det != 1");
        intern(g);
    }
    for (size_t head = 0; head < elements_.size(); ++head) {
        for (const auto& [name, g] : gens) {
            Mat2 p = elements_[head] * g;
            intern(p);
        }
        if (elements_.size() > static_cast<size_t>(2 * input.order))
            throw ValidationError("closure exceeds declared order");
    }
    if (static_cast<long>(elements_.size()) != input.order)
        throw ValidationError(spec_.name() + ": closure has " + std::to_string(elements_.size()) +
                              " elements, expected " + std::to_string(input.order));

    const int n = static_cast<int>(elements_.size());
    // Multiplication table; also verifies closure exhaustively.
    mul_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find((elements_[i] * elements_[j]).key());
            if (it == index.end()) throw ValidationError("set not closed under multiplication");
            mul_[i][j] = it->second;
        }
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        auto it = index.find(elements_[i].inverse_det1().key());
        if (it == index.end()) throw ValidationError("inverse not in element set");
        inv_[i] = it->second;
        if (mul_[i][inv_[i]] != identity_) throw ValidationError("bad inverse");
    }

    // Element orders and group exponent.
    element_order_.assign(n, 0);
    exponent_ = 1;
    for (int i = 0; i < n; ++i) {
        int p = i, ord = 1;
        while (p != identity_) {
            p = mul_[p][i];
            ++ord;
        }
        element_order_[i] = ord;
        exponent_ = std::lcm(exponent_, static_cast<long>(ord));
    }

    // Verify the declared presentation relations.
    for (const auto& [lhs, rhs] : input.relations) {
        Mat2 l = eval_word(lhs, gens, matrix_field_);
        Mat2 r = eval_word(rhs, gens, matrix_field_);
        if (!(l == r)) throw ValidationError("relation fails: " + lhs + " = " + rhs);
        relations_.push_back(lhs + " = " + rhs);
    }

    // Conjugacy classes in label order.
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int e = 0; e < n; ++e) {
        if (class_of_[e] >= 0) continue;
        std::vector<int> orbit;
        for (int g = 0; g < n; ++g) {
            int c = mul_[mul_[g][e]][inv_[g]];
            if (class_of_[c] < 0) {
                class_of_[c] = static_cast<int>(orbits.size());
                orbit.push_back(c);
            }
        }
        orbits.push_back(std::move(orbit));
    }
    if (input.class_labels.size() != orbits.size())
        throw ValidationError(spec_.name() + ": " + std::to_string(input.class_labels.size()) +
                              " class labels for " + std::to_string(orbits.size()) + " classes");

    std::vector<int> orbit_to_class(orbits.size(), -1);
    classes_.clear();
    for (size_t ci = 0; ci < input.class_labels.size(); ++ci) {
        const auto& [label, word] = input.class_labels[ci];
        Mat2 m = eval_word(word, gens, matrix_field_);
        auto it = index.find(m.key());
        if (it == index.end()) throw ValidationError("class word not in group: " + word);
        int orbit = class_of_[it->second];
        if (orbit_to_class[orbit] >= 0)
            throw ValidationError("class labels " + label + " and " +
                                  classes_[orbit_to_class[orbit]].label + " name the same class");
        orbit_to_class[orbit] = static_cast<int>(ci);
        ConjClass cc;
        cc.label = label;
        cc.representative = it->second;
        cc.size = static_cast<int>(orbits[orbit].size());
        cc.centralizer_order = input.order / cc.size;
        if (cc.centralizer_order * cc.size != input.order)
            throw ValidationError("class size does not divide the group order");
        cc.age = age_from_order_and_trace(element_order_[it->second],
                                          elements_[it->second].trace());
        classes_.push_back(std::move(cc));
    }
    // Re-map class_of_ from orbit ids to label order and check the identity.
    for (int e = 0; e < n; ++e) class_of_[e] = orbit_to_class[class_of_[e]];
    long size_sum = 0;
    for (const auto& c : classes_) size_sum += c.size;
    if (size_sum != input.order) throw ValidationError("class sizes do not sum to |G|");
    if (classes_[class_of_[identity_]].age != 0)
        throw ValidationError("identity class has nonzero age");
    for (auto& c : classes_) c.inverse_class = class_of_[inv_[c.representative]];

    // Character table validation.
    chartable_ = input.chartable;
    const auto& ct = chartable_;
    if (ct.irreps.size() != classes_.size())
        throw ValidationError("irrep count != class count");
    long dimsq = 0;
    for (const auto& ir : ct.irreps) dimsq += static_cast<long>(ir.dim) * ir.dim;
    if (dimsq != input.order) throw ValidationError("sum of dim^2 != |G|");
    int id_cls = class_of_[identity_];
    for (size_t i = 0; i < ct.irreps.size(); ++i) {
        if (ct.values[i].size() != classes_.size())
            throw ValidationError("character row has wrong length");
        if (ct.values[i][id_cls] != Cyclo(rat(ct.irreps[i].dim)))
            throw ValidationError("character at identity != dim for " + ct.irreps[i].name);
    }
    for (size_t i = 0; i < ct.irreps.size(); ++i)
        for (size_t j = i; j < ct.irreps.size(); ++j) {
            Cyclo s;
            for (size_t c = 0; c < classes_.size(); ++c)
                s += ct.at(static_cast<int>(i), static_cast<int>(c)) *
                     ct.at(static_cast<int>(j), static_cast<int>(c)).conj() *
                     rat(classes_[c].size);
            Cyclo expect = i == j ? Cyclo(rat(input.order)) : Cyclo();
            if (s != expect)
                throw ValidationError("row orthogonality fails for " + ct.irreps[i].name + ", " +
                                      ct.irreps[j].name);
        }
    (void)ct.trivial_index();

    // chi_{rho_1} from matrix traces, and its irrep row for D/E.
    rho1_char_.clear();
    for (const auto& c : classes_) rho1_char_.push_back(elements_[c.representative].trace());
    rho1_irrep_.reset();
    if (spec_.kind != GroupKind::A) {
        for (size_t i = 0; i < ct.irreps.size(); ++i) {
            if (ct.irreps[i].dim != 2) continue;
            bool match = true;
            for (size_t c = 0; c < classes_.size(); ++c)
                if (!(ct.values[i][c] == rho1_char_[c])) { match = false; break; }
            if (match) { rho1_irrep_ = static_cast<int>(i); break; }
        }
        if (!rho1_irrep_)
            throw ValidationError("no 2-dim irrep matches the defining character");
        // faithful: chi(-1) = -2
        for (size_t c = 0; c < classes_.size(); ++c)
            if (classes_[c].size == 1 && c != static_cast<size_t>(id_cls) &&
                !(rho1_char_[c] == Cyclo(rat(-2))))
                throw ValidationError("central character value is not -2");
    }

    // Every alias must resolve.
    for (const auto& [alias, label] : input.aliases) (void)class_index(label);
}

ADEGroup ADEGroup::build_from(const BuildInput& input) {
    ADEGroup g;
    g.finish_build(input);
    return g;
}

namespace {

std::map<std::string, std::pair<std::string, std::string>>& alias_registry() {
    static std::map<std::string, std::pair<std::string, std::string>> r;
    return r;
}

}  // namespace

int ADEGroup::class_index(const std::string& label) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label) return static_cast<int>(i);
    // aliases ("-1" for the D_n central class)
    auto& reg = alias_registry();
    auto it = reg.find(spec_.name() + "/" + label);
    if (it != reg.end()) return class_index(it->second.second);
    throw UnknownClass(label + " in " + spec_.name());
}

const ADEGroup& ADEGroup::get(const GroupSpec& spec, const std::string& data_dir) {
    static std::map<std::string, std::unique_ptr<ADEGroup>> cache;
    static std::mutex mu;
    std::string dir = data_dir.empty() ? ADE_DEFAULT_DATA_DIR : data_dir;
    std::string key = spec.name() + "@" + dir;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    BuildInput input;
    switch (spec.kind) {
        case GroupKind::A: input = make_type_a_input(spec.n); break;
        case GroupKind::D: input = make_type_d_input(spec.n); break;
        case GroupKind::E6: input = load_group_file(dir + "/e6.group"); break;
        case GroupKind::E7: input = load_group_file(dir + "/e7.group"); break;
        case GroupKind::E8: input = load_group_file(dir + "/e8.group"); break;
    }
    if (!(input.spec.kind == spec.kind && input.spec.n == spec.n))
        throw ValidationError("data file declares a different group");
    auto g = std::unique_ptr<ADEGroup>(new ADEGroup(build_from(input)));
    for (const auto& [alias, label] : input.aliases)
        alias_registry()[spec.name() + "/" + alias] = {spec.name(), label};
    auto& slot = cache[key];
    slot = std::move(g);
    return *slot;
}

std::vector<std::vector<long>> mckay_graph(const ADEGroup& g) {
    const auto& ct = g.character_table();
    const size_t k = ct.irreps.size();
    std::vector<std::vector<long>> adj(k, std::vector<long>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Cyclo s;
            for (size_t c = 0; c < g.classes().size(); ++c)
                s += ct.values[i][c] * g.rho1_character()[c] * ct.values[j][c].conj() *
                     rat(g.classes()[c].size);
            Cyclo m = s * rat(1, g.order());
            if (!m.is_rational())
                throw NonIntegerMultiplicity("McKay multiplicity not rational at (" +
                                             ct.irreps[i].name + "," + ct.irreps[j].name + ")");
            Rat r = m.rational_value();
            if (r.get_den() != 1)
                throw NonIntegerMultiplicity("McKay multiplicity " + r.get_str());
            adj[i][j] = static_cast<long>(r.get_num().get_si());
        }
    for (size_t i = 0; i < k; ++i) {
        if (adj[i][i] != 0) throw ValidationError("McKay graph has a loop");
        for (size_t j = 0; j < k; ++j)
            if (adj[i][j] != adj[j][i]) throw ValidationError("McKay graph not symmetric");
    }
    return adj;
}

long regular_rep_trivial_count(const ADEGroup& g) {
    auto adj = mckay_graph(g);
    int triv = g.character_table().trivial_index();
    long s = 0;
    for (long x : adj[triv]) s += x;
    return s;
}

long hodge_bundle_rank_r0(const ADEGroup& g, int genus, Sector sector) {
    if (sector == Sector::nontrivial) return 0;
    if (genus == 0) return 2;  // H^0(P^1, O^2)
    return g.spec().kind == GroupKind::A ? 2 : 1;
}

long hodge_bundle_rank(const ADEGroup& g, int genus, int n, int m, Sector sector) {
    if (genus < 0 || m < 0 || m > n) throw InvalidParameter("bad (g, n, m)");
    if (sector == Sector::trivial) {
        if (m != n) throw InvalidSector("trivial sector requires all markings trivial");
        if (genus == 0) return 0;
        return g.spec().kind == GroupKind::A ? 2L * genus : 2L * genus - 1;
    }
    if (m == n) throw InvalidSector("nontrivial sector requires a nontrivial marking");
    return 2L * genus - 2 + n - m;
}

namespace {

Rat assert_rational(const Cyclo& c, const std::string& what) {
    if (!c.is_rational()) throw ValidationError(what + " is not rational: " + c.to_string());
    return c.rational_value();
}

std::map<std::string, std::vector<std::vector<std::vector<Rat>>>>& tp_cache() {
    static std::map<std::string, std::vector<std::vector<std::vector<Rat>>>> c;
    return c;
}
std::mutex tp_mutex;

}  // namespace

const std::vector<std::vector<std::vector<Rat>>>& three_point_table(const ADEGroup& g) {
    std::lock_guard<std::mutex> lock(tp_mutex);
    auto& cache = tp_cache();
    auto it = cache.find(g.spec().name());
    if (it != cache.end()) return it->second;
    const int n = static_cast<int>(g.order());
    const size_t k = g.classes().size();
    std::vector<std::vector<std::vector<long>>> count(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
            int g3 = g.inv(g.mul(g1, g2));
            ++count[g.class_of(g1)][g.class_of(g2)][g.class_of(g3)];
        }
    std::vector<std::vector<std::vector<Rat>>> table(
        k, std::vector<std::vector<Rat>>(k, std::vector<Rat>(k)));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            for (size_t c = 0; c < k; ++c) table[a][b][c] = rat(count[a][b][c], n);
    return cache.emplace(g.spec().name(), std::move(table)).first->second;
}

Rat bg_three_point(const ADEGroup& g, const std::string& c1, const std::string& c2,
                   const std::string& c3) {
    int i1 = g.class_index(c1), i2 = g.class_index(c2), i3 = g.class_index(c3);
    const auto& ct = g.character_table();
    Cyclo total;
    for (size_t r = 0; r < ct.irreps.size(); ++r) {
        long d = ct.irreps[r].dim;
        // C_gamma^chi = |gamma| chi(gamma)/chi(1); weight (dim/|G|)^2
        Cyclo prod = ct.values[r][i1] * ct.values[r][i2] * ct.values[r][i3] *
                     rat(static_cast<long>(g.classes()[i1].size) * g.classes()[i2].size *
                             g.classes()[i3].size,
                         d * d * d);
        total += prod * rat(d * d, g.order() * g.order());
    }
    return assert_rational(total, "three-point correlator");
}

Rat bg_three_point_counting(const ADEGroup& g, const std::string& c1, const std::string& c2,
                            const std::string& c3) {
    const auto& t = three_point_table(g);
    return t[g.class_index(c1)][g.class_index(c2)][g.class_index(c3)];
}

GroupSpec classify_affine_diagram(const std::vector<std::vector<long>>& adj) {
    const size_t k = adj.size();
    if (k < 2) throw ValidationError("diagram too small");
    // Connectivity and degree data (row sums count edge multiplicity).
    std::vector<long> deg(k, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (adj[i][j] < 0) throw ValidationError("negative multiplicity");
            deg[i] += adj[i][j];
        }
    std::vector<char> seen(k, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < k; ++j)
            if (adj[v][j] > 0 && !seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    if (reached != k) throw ValidationError("diagram not connected");

    if (k == 2) {
        if (adj[0][1] == 2) return {GroupKind::A, 1};  // affine A_1: double bond
        throw ValidationError("unrecognized 2-node diagram");
    }
    bool all_two = std::all_of(deg.begin(), deg.end(), [](long d) { return d == 2; });
    if (all_two) return {GroupKind::A, static_cast<int>(k) - 1};  // cycle

    // Trees: count branch nodes.
    std::vector<size_t> branches, leaves;
    for (size_t i = 0; i < k; ++i) {
        if (deg[i] > 2) branches.push_back(i);
        if (deg[i] == 1) leaves.push_back(i);
    }
    if (branches.size() == 1 && deg[branches[0]] == 4 && k == 5)
        return {GroupKind::D, 4};  // affine D_4 star
    if (branches.size() == 2) {
        // affine D_n: two trivalent forks, n+1 nodes
        if (deg[branches[0]] == 3 && deg[branches[1]] == 3 && leaves.size() == 4)
            return {GroupKind::D, static_cast<int>(k) - 1};
        throw ValidationError("unrecognized two-branch diagram");
    }
    if (branches.size() == 1 && deg[branches[0]] == 3) {
        // arm lengths from the branch point
        std::vector<int> arms;
        for (size_t j = 0; j < k; ++j) {
            if (adj[branches[0]][j] == 0) continue;
            int len = 1;
            size_t prev = branches[0], cur = j;
            while (deg[cur] == 2) {
                for (size_t nx = 0; nx < k; ++nx)
                    if (adj[cur][nx] > 0 && nx != prev) {
                        prev = cur;
                        cur = nx;
                        ++len;
                        break;
                    }
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<int>{2, 2, 2}) return {GroupKind::E6, 0};
        if (arms == std::vector<int>{1, 3, 3}) return {GroupKind::E7, 0};
        if (arms == std::vector<int>{1, 2, 5}) return {GroupKind::E8, 0};
        throw ValidationError("unrecognized one-branch diagram");
    }
    throw ValidationError("diagram is not an affine ADE shape");
}

}  // namespace ade
