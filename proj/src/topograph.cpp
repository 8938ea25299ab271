#include "conway/topograph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "conway/error.hpp"

namespace conway {

std::string Vec2::str() const { return "(" + to_string(x) + "," + to_string(y) + ")"; }

bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
BigInt det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 apply(const Mat2& m, const Vec2& v) {
    if (m.ring() != Ring::Z) fail(ErrorKind::TagMismatch, "integer matrix expected");
    return {m.a.x * v.x + m.b.x * v.y, m.c.x * v.x + m.d.x * v.y};
}

Mat2 columns(const Vec2& p, const Vec2& q) { return Mat2::integer(p.x, q.x, p.y, q.y); }

Vec2 lax(const Vec2& v) {
    if (v.x > 0 || (v.x == 0 && v.y > 0)) return v;
    return -v;
}

bool is_primitive(const Vec2& v) { return gcd(v.x, v.y) == 1; }

Superbase Superbase::standard() { return normalize_superbase({1, 0}, {0, 1}, {-1, -1}); }

bool Superbase::contains(const Vec2& l) const {
    for (const auto& e : v)
        if (lax(e) == l) return true;
    return false;
}

std::string Superbase::str() const { return "{" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "}"; }

bool operator==(const Superbase& a, const Superbase& b) { return a.v == b.v; }
bool operator!=(const Superbase& a, const Superbase& b) { return !(a == b); }
bool operator<(const Superbase& a, const Superbase& b) { return a.v < b.v; }

Superbase normalize_superbase(const Vec2& a, const Vec2& b, const Vec2& c) {
    const Vec2* in[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        BigInt d = abs(det(*in[i], *in[(i + 1) % 3]));
        if (d != 1)
            fail(ErrorKind::NotASuperbase, "pair " + in[i]->str() + "," + in[(i + 1) % 3]->str() +
                                               " has determinant of absolute value " + to_string(d));
    }
    std::array<Vec2, 3> v{lax(a), lax(b), lax(c)};
    std::sort(v.begin(), v.end());
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            Vec2 t1 = s1 > 0 ? v[1] : -v[1];
            Vec2 t2 = s2 > 0 ? v[2] : -v[2];
            if (v[0] + t1 + t2 == Vec2(0, 0)) return Superbase{{v[0], t1, t2}};
        }
    fail(ErrorKind::InconsistentInput, "no sign choice makes the triple sum to zero");
}

Superbase neighbor(const Superbase& s, int k) {
    auto p = s.pair(k);
    return normalize_superbase(p[0], p[1], p[0] - p[1]);
}

std::array<Superbase, 3> neighbors(const Superbase& s) { return {neighbor(s, 0), neighbor(s, 1), neighbor(s, 2)}; }

Flag Flag::standard() { return make({1, 0}, {0, 1}, Superbase::standard()); }

Flag Flag::make(const Vec2& vector, const Vec2& other, const Superbase& s) {
    Flag f;
    f.vector = lax(vector);
    f.basis = {f.vector, lax(other)};
    std::sort(f.basis.begin(), f.basis.end());
    f.superbase = s;
    return f;
}

bool Flag::valid() const {
    if (vector != basis[0] && vector != basis[1]) return false;
    if (abs(det(basis[0], basis[1])) != 1) return false;
    return superbase.contains(basis[0]) && superbase.contains(basis[1]);
}

Vec2 Flag::partner() const { return vector == basis[0] ? basis[1] : basis[0]; }

Vec2 Flag::third() const {
    for (const auto& e : superbase.v) {
        Vec2 l = lax(e);
        if (l != basis[0] && l != basis[1]) return l;
    }
    fail(ErrorKind::InvariantViolation, "flag superbase does not extend its basis");
}

std::string Flag::str() const {
    return "<" + vector.str() + "|" + basis[0].str() + basis[1].str() + "|" + superbase.str() + ">";
}

bool operator==(const Flag& a, const Flag& b) {
    return a.vector == b.vector && a.basis == b.basis && a.superbase == b.superbase;
}
bool operator<(const Flag& a, const Flag& b) {
    if (a.vector != b.vector) return a.vector < b.vector;
    if (a.basis != b.basis) return a.basis < b.basis;
    return a.superbase < b.superbase;
}

namespace {

void require_unimodular(const Mat2& m) {
    RingElement d = det(m);
    if (m.ring() != Ring::Z || (d.x != 1 && d.x != -1))
        fail(ErrorKind::NotUnimodular, "matrix " + m.str() + " is not in GL2(Z)");
}

}  // namespace

Superbase act(const Mat2& m, const Superbase& s) {
    require_unimodular(m);
    return normalize_superbase(apply(m, s.v[0]), apply(m, s.v[1]), apply(m, s.v[2]));
}

Flag act(const Mat2& m, const Flag& f) {
    require_unimodular(m);
    return Flag::make(apply(m, f.vector), apply(m, f.partner()), act(m, f.superbase));
}

Flag adjacent(const Flag& f, int i) {
    switch (i) {
        case 0: return Flag::make(f.partner(), f.vector, f.superbase);
        case 1: return Flag::make(f.vector, f.third(), f.superbase);
        case 2: {
            // basis vectors are stored up to sign, so p+q may be the current third
            Vec2 p = f.basis[0], q = f.basis[1];
            Vec2 r = lax(p + q) == lax(f.third()) ? p - q : p + q;
            return Flag::make(f.vector, f.partner(), normalize_superbase(p, q, r));
        }
        default: fail(ErrorKind::Precondition, "flag component index must be 0, 1 or 2");
    }
}

namespace {

// Which components of f differ from g: bit i set when component i differs.
int moved_components(const Flag& f, const Flag& g) {
    int m = 0;
    if (f.vector != g.vector) m |= 1;
    if (f.basis != g.basis) m |= 2;
    if (f.superbase != g.superbase) m |= 4;
    return m;
}

bool pm_identity(const Mat2& m) { return projectively_equal(m, Mat2::identity(Ring::Z)); }

}  // namespace

std::vector<Mat2> search_generator(int i) {
    std::vector<Mat2> out;
    Flag c = Flag::standard();
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int cc = -1; cc <= 1; ++cc)
                for (int d = -1; d <= 1; ++d) {
                    long dt = static_cast<long>(a) * d - static_cast<long>(b) * cc;
                    if (dt != 1 && dt != -1) continue;
                    Mat2 m = Mat2::integer(a, b, cc, d);
                    if (moved_components(act(m, c), c) == (1 << i)) out.push_back(m);
                }
    return out;
}

CoxeterReport coxeter_generators() {
    CoxeterReport r;
    r.generators = {Mat2::integer(0, 1, 1, 0), Mat2::integer(1, -1, 0, -1), Mat2::integer(1, 0, 0, -1)};
    const auto& g = r.generators;
    r.involutions = pm_identity(g[0] * g[0]) && pm_identity(g[1] * g[1]) && pm_identity(g[2] * g[2]);
    Mat2 g01 = g[0] * g[1];
    r.braid01 = pm_identity(g01 * g01 * g01);
    r.commute02 = projectively_equal(g[0] * g[2], g[2] * g[0]);
    Flag c = Flag::standard();
    r.stabilizers = true;
    for (int i = 0; i < 3; ++i)
        if (moved_components(act(g[i], c), c) != (1 << i)) r.stabilizers = false;
    return r;
}

namespace {

using WordStr = std::string;

bool shortlex_less(const WordStr& a, const WordStr& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::set<WordStr> braid_class(const WordStr& w) {
    static const std::pair<const char*, const char*> moves[] = {
        {"02", "20"}, {"20", "02"}, {"010", "101"}, {"101", "010"}};
    std::set<WordStr> seen{w};
    std::deque<WordStr> todo{w};
    while (!todo.empty()) {
        WordStr cur = todo.front();
        todo.pop_front();
        for (const auto& [from, to] : moves) {
            std::size_t len = std::char_traits<char>::length(from);
            for (std::size_t pos = cur.find(from); pos != WordStr::npos; pos = cur.find(from, pos + 1)) {
                WordStr next = cur;
                next.replace(pos, len, to);
                if (seen.insert(next).second) todo.push_back(next);
            }
        }
    }
    return seen;
}

WordStr normal_form_str(WordStr w) {
    for (;;) {
        auto cls = braid_class(w);
        bool reduced = true;
        for (const auto& u : cls) {
            for (std::size_t i = 0; i + 1 < u.size(); ++i)
                if (u[i] == u[i + 1]) {
                    w = u.substr(0, i) + u.substr(i + 2);
                    reduced = false;
                    break;
                }
            if (!reduced) break;
        }
        if (reduced) return *std::min_element(cls.begin(), cls.end(), shortlex_less);
    }
}

}  // namespace

Word coxeter_normal_form(const Word& w) {
    WordStr s;
    for (int i : w) {
        if (i < 0 || i > 2) fail(ErrorKind::Precondition, "generator index out of range");
        s.push_back(static_cast<char>('0' + i));
    }
    Word out;
    for (char ch : normal_form_str(s)) out.push_back(ch - '0');
    return out;
}

Flag word_to_flag(const Word& w) {
    auto gens = coxeter_generators().generators;
    Mat2 m = Mat2::identity(Ring::Z);
    for (int i : w) m = m * gens.at(static_cast<std::size_t>(i));
    return act(m, Flag::standard());
}

std::vector<Flag> flag_ball(int radius) {
    std::vector<Flag> out{Flag::standard()};
    std::set<Flag> seen{Flag::standard()};
    std::size_t begin = 0;
    for (int d = 0; d < radius; ++d) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (int i = 0; i < 3; ++i) {
                Flag g = adjacent(out[k], i);
                if (seen.insert(g).second) out.push_back(g);
            }
        begin = end;
    }
    return out;
}

TransitivityReport verify_simple_transitivity(int radius) {
    if (radius < 0 || radius > 8) fail(ErrorKind::Budget, "radius must lie in 0..8");
    TransitivityReport rep;
    rep.radius = radius;
    std::map<WordStr, Flag> image;
    std::vector<WordStr> layer{""};
    for (int len = 0; len <= radius; ++len) {
        std::vector<WordStr> next;
        for (const auto& w : layer) {
            ++rep.words;
            WordStr nf = normal_form_str(w);
            if (!image.count(nf)) {
                Word word;
                for (char ch : nf) word.push_back(ch - '0');
                image.emplace(nf, word_to_flag(word));
            }
            if (len < radius)
                for (char ch : {'0', '1', '2'}) next.push_back(w + ch);
        }
        layer = std::move(next);
    }
    rep.elements = image.size();
    std::set<Flag> flags;
    for (const auto& [w, f] : image) flags.insert(f);
    rep.injective = flags.size() == image.size();
    auto ball = flag_ball(radius);
    rep.flags = ball.size();
    rep.onto = std::set<Flag>(ball.begin(), ball.end()) == flags;
    return rep;
}

SuperbaseBall superbase_ball(int depth) {
    if (depth < 0 || depth > 16) fail(ErrorKind::Budget, "superbase ball depth must lie in 0..16");
    SuperbaseBall ball;
    std::map<Superbase, int> index;
    ball.nodes.push_back(Superbase::standard());
    ball.depth.push_back(0);
    index[ball.nodes[0]] = 0;
    for (std::size_t k = 0; k < ball.nodes.size(); ++k) {
        std::array<int, 3> adj{-1, -1, -1};
        for (int e = 0; e < 3; ++e) {
            Superbase n = neighbor(ball.nodes[k], e);
            auto it = index.find(n);
            if (it != index.end()) {
                adj[e] = it->second;
            } else if (ball.depth[k] < depth) {
                int id = static_cast<int>(ball.nodes.size());
                index[n] = id;
                ball.nodes.push_back(n);
                ball.depth.push_back(ball.depth[k] + 1);
                adj[e] = id;
            }
        }
        ball.adjacency.push_back(adj);
    }
    return ball;
}

}  // namespace conway
