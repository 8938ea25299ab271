#include "conway/diform.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "conway/error.hpp"
#include "conway/reduction.hpp"

namespace conway {

namespace {

constexpr std::size_t kMaxSteps = 1'000'000;

void check_sigma(int sigma) {
    if (sigma != 2 && sigma != 3) fail(ErrorKind::Precondition, "sigma must be 2 or 3");
}

void same_color(const Divector& a, const Divector& b) {
    if (a.color != b.color) fail(ErrorKind::TagMismatch, "divector colors differ: " + a.str() + ", " + b.str());
}

}  // namespace

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

Ring sigma_ring(int sigma) {
    check_sigma(sigma);
    return sigma == 2 ? Ring::Sqrt2 : Ring::Sqrt3;
}

std::string Divector::str() const {
    return std::string(color == Color::Red ? "r" : "b") + "(" + to_string(u) + "," + to_string(v) + ")";
}

bool operator==(const Divector& a, const Divector& b) { return a.color == b.color && a.u == b.u && a.v == b.v; }
bool operator!=(const Divector& a, const Divector& b) { return !(a == b); }
bool operator<(const Divector& a, const Divector& b) {
    if (a.color != b.color) return a.color < b.color;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
}
Divector operator+(const Divector& a, const Divector& b) {
    same_color(a, b);
    return {a.color, a.u + b.u, a.v + b.v};
}
Divector operator-(const Divector& a, const Divector& b) {
    same_color(a, b);
    return {a.color, a.u - b.u, a.v - b.v};
}
Divector operator-(const Divector& a) { return {a.color, -a.u, -a.v}; }
Divector operator*(const BigInt& k, const Divector& a) { return {a.color, k * a.u, k * a.v}; }

Divector times_root(int sigma, const Divector& d) {
    if (d.color == Color::Red) return Divector::blue(d.u, sigma * d.v);
    return Divector::red(sigma * d.u, d.v);
}

Divector lax(const Divector& d) {
    if (d.u > 0 || (d.u == 0 && d.v > 0)) return d;
    return -d;
}

bool is_primitive(int sigma, const Divector& d) {
    if (d.color == Color::Red) return gcd(d.u, sigma * d.v) == 1;
    return gcd(sigma * d.u, d.v) == 1;
}

RVec as_ring_vector(int sigma, const Divector& d) {
    Ring r = sigma_ring(sigma);
    if (d.color == Color::Red) return {RingElement(r, d.u, 0), RingElement(r, 0, d.v)};
    return {RingElement(r, 0, d.u), RingElement(r, d.v, 0)};
}

BigInt dibasis_det(int sigma, const Dibasis& d) { return d.r.u * d.b.v - sigma * d.r.v * d.b.u; }

bool is_dibasis(int sigma, const Dibasis& d) {
    if (d.r.color != Color::Red || d.b.color != Color::Blue) return false;
    BigInt dt = dibasis_det(sigma, d);
    return dt == 1 || dt == -1;
}

Dibasis make_dibasis(int sigma, const Divector& x, const Divector& y) {
    check_sigma(sigma);
    if (x.color == y.color) fail(ErrorKind::Dibasis, "a dibasis needs one red and one blue divector");
    Dibasis d = x.color == Color::Red ? Dibasis{x, y} : Dibasis{y, x};
    if (!is_dibasis(sigma, d))
        fail(ErrorKind::Dibasis, d.r.str() + ", " + d.b.str() + " has determinant " + to_string(dibasis_det(sigma, d)));
    return d;
}

std::pair<Divector, Divector> Pinwheel::edge(std::size_t k) const {
    std::size_t n = faces.size();
    return {faces[k % n], k + 1 < n ? faces[k + 1] : -faces[0]};
}

std::vector<Divector> Pinwheel::key() const {
    std::vector<Divector> k;
    for (const auto& f : faces) k.push_back(lax(f));
    std::sort(k.begin(), k.end());
    return k;
}

Pinwheel pinwheel_from(int sigma, const Divector& x0, const Divector& x1) {
    make_dibasis(sigma, x0, x1);
    Pinwheel p;
    p.sigma = sigma;
    p.faces = {x0, x1};
    std::size_t n = static_cast<std::size_t>(2 * sigma);
    while (p.faces.size() < n + 1) {
        std::size_t k = p.faces.size();
        p.faces.push_back(times_root(sigma, p.faces[k - 1]) - p.faces[k - 2]);
    }
    if (p.faces[n] != -x0) fail(ErrorKind::InvariantViolation, "pinwheel does not close after 2 sigma steps");
    p.faces.pop_back();
    return p;
}

Pinwheel pinwheel_complete(int sigma, const Dibasis& d) {
    check_sigma(sigma);
    if (!is_dibasis(sigma, d)) fail(ErrorKind::Dibasis, "not a dibasis: " + d.r.str() + ", " + d.b.str());
    return pinwheel_from(sigma, d.r, d.b);
}

Pinwheel pinwheel_neighbor(const Pinwheel& p, std::size_t k) {
    auto e = p.edge(k);
    return pinwheel_from(p.sigma, e.first, -e.second);
}

PinwheelBall pinwheel_ball(int sigma, int depth) {
    check_sigma(sigma);
    if (depth < 0 || depth > 12) fail(ErrorKind::Budget, "pinwheel ball depth must lie in 0..12");
    PinwheelBall ball;
    std::map<std::vector<Divector>, int> index;
    ball.nodes.push_back(pinwheel_from(sigma, Divector::red(1, 0), Divector::blue(0, 1)));
    ball.depth.push_back(0);
    index[ball.nodes[0].key()] = 0;
    for (std::size_t k = 0; k < ball.nodes.size(); ++k) {
        std::vector<int> adj(static_cast<std::size_t>(2 * sigma), -1);
        for (std::size_t e = 0; e < adj.size(); ++e) {
            Pinwheel n = pinwheel_neighbor(ball.nodes[k], e);
            auto key = n.key();
            auto it = index.find(key);
            if (it != index.end()) {
                adj[e] = it->second;
            } else if (ball.depth[k] < depth) {
                int id = static_cast<int>(ball.nodes.size());
                index[key] = id;
                ball.nodes.push_back(n);
                ball.depth.push_back(ball.depth[k] + 1);
                adj[e] = id;
            }
        }
        ball.adjacency.push_back(adj);
    }
    return ball;
}

BQD::BQD(int s, BigInt a_, BigInt b_, BigInt c_) : sigma(s), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    check_sigma(s);
}

std::string BQD::str() const {
    return "(" + to_string(a) + "," + to_string(b) + "r" + std::to_string(sigma) + "," + to_string(c) + ")";
}

BigInt discriminant(const BQD& q) { return q.sigma * (q.b * q.b * q.sigma - 4 * q.a * q.c); }

bool is_primitive(const BQD& q) { return gcd(gcd(q.a, q.b), q.c) == 1; }

FormClass classify(const BQD& q) {
    BigInt d = discriminant(q);
    if (d < 0) return q.a > 0 ? FormClass::PositiveDefinite : FormClass::NegativeDefinite;
    if (is_square(d)) return FormClass::Degenerate;
    return FormClass::IndefiniteNondegenerate;
}

BigInt evaluate(const BQD& q, const Divector& d) {
    const int s = q.sigma;
    if (d.color == Color::Red) return q.a * d.u * d.u + s * q.b * d.u * d.v + s * q.c * d.v * d.v;
    return s * q.a * d.u * d.u + s * q.b * d.u * d.v + q.c * d.v * d.v;
}

BQF q_red(const BQD& q) { return {q.a, q.sigma * q.b, q.sigma * q.c}; }
BQF q_blue(const BQD& q) { return {q.sigma * q.a, q.sigma * q.b, q.c}; }

DiCellValues dicell_values(const BQD& q, const Dibasis& d) {
    const int s = q.sigma;
    if (!is_dibasis(s, d)) fail(ErrorKind::Dibasis, "not a dibasis: " + d.r.str() + ", " + d.b.str());
    Divector sr = times_root(s, d.r), sb = times_root(s, d.b);
    DiCellValues cv;
    cv.u = evaluate(q, d.r);
    cv.v = evaluate(q, d.b);
    cv.e = evaluate(q, sr - d.b);
    cv.f = evaluate(q, sr + d.b);
    cv.e2 = evaluate(q, d.r - sb);
    cv.f2 = evaluate(q, d.r + sb);
    if (s == 3) {
        Divector r2 = BigInt(2) * d.r, b2 = BigInt(2) * d.b;
        cv.m = evaluate(q, r2 - sb);
        cv.n = evaluate(q, r2 + sb);
        cv.m2 = evaluate(q, sr - b2);
        cv.n2 = evaluate(q, sr + b2);
    }
    cv.delta = cv.f - (s * cv.u + cv.v);
    return cv;
}

BQD dibasis_form(const BQD& q, const Dibasis& d) {
    DiCellValues cv = dicell_values(q, d);
    BigInt mid;
    if (!mpz_divisible_ui_p(cv.delta.get_mpz_t(), static_cast<unsigned long>(q.sigma)))
        fail(ErrorKind::InvariantViolation, "step size not divisible by sigma");
    mid = cv.delta / q.sigma;
    return {q.sigma, cv.u, mid, cv.v};
}

namespace {

void require_positive_definite(const BQD& q) {
    if (classify(q) != FormClass::PositiveDefinite)
        fail(ErrorKind::Classification, q.str() + " is not positive-definite");
}

void require_indefinite(const BQD& q) {
    FormClass k = classify(q);
    if (k == FormClass::Degenerate)
        fail(ErrorKind::SquareOrInvalidDiscriminant,
             q.str() + " has square discriminant " + to_string(discriminant(q)));
    if (k != FormClass::IndefiniteNondegenerate) fail(ErrorKind::Classification, q.str() + " is not indefinite");
}

// Q(sqrt(s) x + y) - Q(sqrt(s) x - y): negative when the edge arrow points into P(x, y).
BigInt edge_step(const BQD& q, const Divector& x, const Divector& y) {
    Divector sx = times_root(q.sigma, x);
    return evaluate(q, sx + y) - evaluate(q, sx - y);
}

}  // namespace

DiWell diform_well_from(const BQD& q, const Dibasis& start) {
    require_positive_definite(q);
    DiWell w;
    Pinwheel p = pinwheel_complete(q.sigma, start);
    for (;;) {
        int best = -1;
        BigInt most = 0;
        for (std::size_t k = 0; k < p.faces.size(); ++k) {
            auto e = p.edge(k);
            BigInt st = edge_step(q, e.first, e.second);
            if (st < most) {
                most = st;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) break;
        p = pinwheel_neighbor(p, static_cast<std::size_t>(best));
        if (++w.steps > kMaxSteps) fail(ErrorKind::Budget, "diform descent did not terminate");
    }
    w.source = p;
    std::vector<Divector> key = p.key();
    for (std::size_t k = 0; k < p.faces.size(); ++k) {
        w.values.push_back(evaluate(q, p.faces[k]));
        auto e = p.edge(k);
        if (edge_step(q, e.first, e.second) == 0) {
            w.flat_edges.push_back(k);
            auto other = pinwheel_neighbor(p, k).key();
            key.insert(key.end(), other.begin(), other.end());
        }
    }
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    w.source_key = key;
    w.red_reduced = reduce_definite(q_red(q));
    w.blue_reduced = reduce_definite(q_blue(q));
    return w;
}

DiWell diform_well(const BQD& q) {
    return diform_well_from(q, Dibasis{Divector::red(1, 0), Divector::blue(0, 1)});
}

std::pair<Divector, Divector> diform_river_edge(const BQD& q) {
    require_indefinite(q);
    Pinwheel p = pinwheel_from(q.sigma, Divector::red(1, 0), Divector::blue(0, 1));
    for (std::size_t it = 0; it < kMaxSteps; ++it) {
        std::size_t n = p.faces.size();
        std::vector<BigInt> vals;
        for (const auto& f : p.faces) vals.push_back(evaluate(q, f));
        for (std::size_t k = 0; k < n; ++k)
            if (sign(vals[k]) != sign(vals[(k + 1) % n])) return p.edge(k);
        // One sign throughout: walk toward smaller absolute values.
        int sg = sign(vals[0]);
        int best = -1;
        BigInt most = 0;
        for (std::size_t k = 0; k < n; ++k) {
            auto e = p.edge(k);
            BigInt st = sg * edge_step(q, e.first, e.second);
            if (st < most) {
                most = st;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) fail(ErrorKind::InvariantViolation, "indefinite diform has a source");
        p = pinwheel_neighbor(p, static_cast<std::size_t>(best));
    }
    fail(ErrorKind::Budget, "diform river search did not terminate");
}

bool is_bend(const BQD& q, const Divector& x, const Divector& y) {
    DiCellValues cv = dicell_values(q, make_dibasis(q.sigma, x, y));
    auto split = [](const BigInt& a, const BigInt& b) { return (a > 0) != (b > 0); };
    if (split(cv.e, cv.f) || split(cv.e2, cv.f2)) return true;
    if (q.sigma == 3 && (split(*cv.m, *cv.n) || split(*cv.m2, *cv.n2))) return true;
    return false;
}

namespace {

Mat2 column_matrix(int sigma, const Divector& x, const Divector& y) {
    RVec a = as_ring_vector(sigma, x), b = as_ring_vector(sigma, y);
    return {a[0], b[0], a[1], b[1]};
}

Mat2 gram(const BQD& q) {
    Ring r = sigma_ring(q.sigma);
    return {RingElement(r, 2 * q.a, 0), RingElement(r, 0, q.b), RingElement(r, 0, q.b), RingElement(r, 2 * q.c, 0)};
}

}  // namespace

DiRiver diform_river(const BQD& q) {
    auto start = diform_river_edge(q);
    const int s = q.sigma;
    DiRiver out;
    out.delta = discriminant(q);
    Mat2 g = gram(q);
    Mat2 m0inv = inverse(column_matrix(s, start.first, start.second));
    Divector y0 = start.first, y1 = start.second;
    bool have_mu = false;
    for (std::size_t it = 0; it < kMaxSteps; ++it) {
        DiRiverStep st{y0, y1, is_bend(q, y0, y1)};
        if (st.bend) ++out.bends;
        out.steps.push_back(st);
        Pinwheel p = pinwheel_from(s, y0, y1);
        std::size_t n = p.faces.size();
        std::vector<BigInt> vals;
        for (const auto& f : p.faces) {
            vals.push_back(evaluate(q, f));
            BigInt a = abs(vals.back());
            if (!have_mu || a < out.mu) {
                out.mu = a;
                out.witness = lax(f);
                have_mu = true;
            }
        }
        std::vector<std::size_t> changes;
        for (std::size_t j = 1; j < n; ++j)
            if (sign(vals[j]) != sign(vals[(j + 1) % n])) changes.push_back(j);
        if (changes.size() != 1)
            fail(ErrorKind::InvariantViolation, "river branches or ends at pinwheel through " + y0.str());
        std::size_t j = changes[0];
        y0 = p.faces[j];
        y1 = j + 1 < n ? -p.faces[j + 1] : p.faces[0];
        if (y0.color == start.first.color) {
            Mat2 t = column_matrix(s, y0, y1) * m0inv;
            if (transpose(t) * g * t == g) {
                out.automorph = t;
                out.exceptional = out.bends == 0;
                BigInt mu2 = out.mu * out.mu;
                out.bound_ok = s == 2 ? 10 * mu2 <= out.delta : 25 * mu2 <= 2 * out.delta;
                return out;
            }
        }
    }
    fail(ErrorKind::Budget, "diform river period exceeds the step budget");
}

std::optional<Mat2> conjugate_to_gamma0(int sigma, const Mat2& m) {
    Ring r = sigma_ring(sigma);
    if (m.ring() != r) fail(ErrorKind::TagMismatch, "matrix over the wrong ring");
    Mat2 g{RingElement::one(r), RingElement::zero(r), RingElement::zero(r), RingElement(r, 0, 1)};
    Mat2 h{RingElement(r, sigma, 0), RingElement::zero(r), RingElement::zero(r), RingElement(r, 0, 1)};
    Mat2 n = g * m * h;  // sigma * g m g^-1
    BigInt out[4];
    const RingElement* e[4] = {&n.a, &n.b, &n.c, &n.d};
    for (int i = 0; i < 4; ++i) {
        if (e[i]->y != 0 || !mpz_divisible_ui_p(e[i]->x.get_mpz_t(), static_cast<unsigned long>(sigma)))
            return std::nullopt;
        out[i] = e[i]->x / sigma;
    }
    return Mat2::integer(out[0], out[1], out[2], out[3]);
}

Gamma0Report verify_gamma0_conjugation(int sigma) {
    Ring r = sigma_ring(sigma);
    Gamma0Report rep;
    rep.sigma = sigma;
    auto in_gamma0 = [&](const Mat2& m) {
        RingElement d = det(m);
        return (d.x == 1 || d.x == -1) && d.y == 0 && mpz_divisible_ui_p(m.c.x.get_mpz_t(), static_cast<unsigned long>(sigma));
    };
    auto check_forward = [&](const Mat2& m) {
        ++rep.forward_checked;
        auto c = conjugate_to_gamma0(sigma, m);
        if (c && in_gamma0(*c)) ++rep.forward_ok;
    };
    RingElement one = RingElement::one(r), zero = RingElement::zero(r), root(r, 0, 1);
    check_forward(Mat2::identity(r));
    // Random words in the elementary dilinear matrices.
    const Mat2 gens[4] = {{one, root, zero, one}, {one, -root, zero, one}, {one, zero, root, one}, {one, zero, -root, one}};
    std::mt19937 rng(20240601u + static_cast<unsigned>(sigma));
    std::uniform_int_distribution<int> pick(0, 3), len(1, 8);
    for (int k = 0; k < 100; ++k) {
        Mat2 m = Mat2::identity(r);
        for (int l = len(rng); l > 0; --l) m = m * gens[pick(rng)];
        if (k % 2) m = m * Mat2{one, zero, zero, -one};
        check_forward(m);
    }
    // Converse: small elements of Gamma0(sigma) pulled back to the dilinear pattern.
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4 * sigma; c <= 4 * sigma; c += sigma)
                for (long d = -4; d <= 4; ++d) {
                    long dt0 = a * d - b * c;
                    if (dt0 != 1 && dt0 != -1) continue;
                    ++rep.converse_checked;
                    Mat2 m{RingElement(r, a, 0), RingElement(r, 0, b), RingElement(r, 0, c / sigma), RingElement(r, d, 0)};
                    RingElement dt = det(m);
                    auto back = conjugate_to_gamma0(sigma, m);
                    if (dt == RingElement(r, dt0, 0) && back && *back == Mat2::integer(a, b, c, d)) ++rep.converse_ok;
                }
    // Dilinear elements outside the plus part.
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    long dt = sigma * a * d - b * c;
                    if (dt != 1 && dt != -1) continue;
                    ++rep.nonplus_checked;
                    Mat2 m{RingElement(r, 0, a), RingElement(r, b, 0), RingElement(r, c, 0), RingElement(r, 0, d)};
                    if (conjugate_to_gamma0(sigma, m)) ++rep.nonplus_integral;
                }
    return rep;
}

}  // namespace conway
