#include "flowfan/families.hpp"

#include <algorithm>
#include <functional>

namespace flowfan {

namespace {

struct Builder {
    Digraph g;
    std::vector<Colour> col;
    int v(const std::string& name) {
        if (auto i = g.vertex_index(name)) return *i;
        return g.add_vertex(name);
    }
    void e(const std::string& t, const std::string& h, Colour c, const std::string& id = {}) {
        int a = v(t), b = v(h);
        g.add_edge(a, b, id);
        col.push_back(c);
    }
    FramedGraph done() { return FramedGraph(std::move(g), std::move(col)); }
};

constexpr Colour R = Colour::Red;
constexpr Colour B = Colour::Blue;

}  // namespace

FramedGraph x_graph() {
    Builder b;
    for (const char* n : {"s1", "s2", "s3", "u", "v", "t1", "t2", "t3"}) b.v(n);
    b.e("s1", "u", B);
    b.e("s2", "u", R);
    b.e("u", "t1", R);
    b.e("u", "v", B);
    b.e("s3", "v", R);
    b.e("v", "t2", R);
    b.e("v", "t3", B);
    return b.done();
}

FramedGraph xx_graph() {
    Builder b;
    for (const char* n : {"s1", "s2", "s3", "s4", "l", "d", "u", "r", "t1", "t2", "t3", "t4"}) b.v(n);
    b.e("s1", "l", R);
    b.e("s2", "l", B);
    b.e("l", "d", R);
    b.e("l", "u", B);
    b.e("s3", "d", B);
    b.e("d", "t1", R);
    b.e("d", "r", B);
    b.e("s4", "u", R);
    b.e("u", "r", R);
    b.e("u", "t2", B);
    b.e("r", "t3", R);
    b.e("r", "t4", B);
    return b.done();
}

FramedGraph path_graph(int k) {
    if (k < 0) throw Error(Errc::Precondition, "path length must be >= 0");
    Builder b;
    if (k == 0) {
        b.e("s", "t", B);
        return b.done();
    }
    auto vn = [](int i) { return "v" + std::to_string(i); };
    b.e("s0", vn(1), B);
    for (int i = 1; i <= k; ++i) {
        b.e("s" + std::to_string(i), vn(i), R);
        b.e(vn(i), "t" + std::to_string(i), R);
        if (i < k) b.e(vn(i), vn(i + 1), B);
    }
    b.e(vn(k), "t0", B);
    return b.done();
}

FramedGraph blossomed_cycle(int n) {
    if (n < 2) throw Error(Errc::Precondition, "blossomed cycle needs n >= 2");
    Builder b;
    for (int i = 1; i <= n; ++i) b.v(std::to_string(i));
    for (int i = 1; i <= n; ++i) b.v("s" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b.v("t" + std::to_string(i));
    for (int i = 1; i <= n; ++i) b.e(std::to_string(i), std::to_string(i % n + 1), R);
    for (int i = 1; i <= n; ++i) b.e("s" + std::to_string(i), std::to_string(i), B);
    for (int i = 1; i <= n; ++i) b.e(std::to_string(i), "t" + std::to_string(i), B);
    return b.done();
}

int hcp_blue(int, int p, int a, int b) { return a * p + (b - 1); }
int hcp_red(int c, int p, int a, int b) { return (c + 1) * p + (a - 1) * p + (b - 1); }

FramedGraph h_cp(int c, int p) {
    if (c < 1 || p < 2) throw Error(Errc::Precondition, "h_cp needs c >= 1 and p >= 2");
    Builder bl;
    auto vn = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    for (int a = 0; a <= c + 1; ++a)
        for (int b = 1; b <= p; ++b) bl.v(vn(a, b));
    for (int a = 0; a <= c; ++a)
        for (int b = 1; b <= p; ++b) bl.e(vn(a, b), vn(a + 1, b), B);
    for (int a = 1; a <= c; ++a)
        for (int b = 1; b <= p; ++b) bl.e(vn(a, b), vn(a, b % p + 1), R);
    return bl.done();
}

Digraph no_ample_left() {
    Digraph g;
    for (const char* n : {"1", "2", "3", "4", "5", "a1", "a2", "a3", "z4", "z5", "y5"}) g.add_vertex(n);
    auto e = [&](const char* t, const char* h) { g.add_edge(*g.vertex_index(t), *g.vertex_index(h)); };
    e("1", "2");
    e("2", "1");
    e("3", "4");
    e("4", "3");
    e("a1", "1");
    e("a2", "2");
    e("a3", "3");
    e("2", "4");
    e("1", "5");
    e("3", "5");
    e("4", "z4");
    e("5", "z5");
    e("5", "y5");
    return g;
}

Digraph no_ample_right() {
    Digraph g;
    for (const char* n : {"1", "2", "3", "a1", "a2", "z1", "z2"}) g.add_vertex(n);
    auto e = [&](const char* t, const char* h) { g.add_edge(*g.vertex_index(t), *g.vertex_index(h)); };
    e("1", "2");
    e("2", "1");
    e("a1", "1");
    e("a2", "2");
    e("1", "3");
    e("2", "3");
    e("3", "z1");
    e("3", "z2");
    return g;
}

BigInt multinomial_volume(int c, int p) {
    BigInt r = 1;
    int done = 0;
    for (int i = 0; i <= c; ++i) {
        done += p - 1;
        r *= binomial(done, p - 1);
    }
    return r;
}

// --- barred words --------------------------------------------------------------

int barred_word_length(const BarredWord& w) {
    int n = w.p;
    for (int x : w.a) n += x;
    return n;
}

namespace {

void check_word(const BarredWord& w) {
    if (w.p < 2 || static_cast<int>(w.a.size()) != w.p)
        throw Error(Errc::MalformedWord, "need p >= 2 and p multiplicities");
    for (int x : w.a)
        if (x < 0) throw Error(Errc::MalformedWord, "negative multiplicity");
    if (static_cast<int>(w.bars.size()) != w.p - 1) throw Error(Errc::MalformedWord, "need exactly p-1 bars");
    const int n = barred_word_length(w);
    for (std::size_t i = 0; i < w.bars.size(); ++i) {
        if (w.bars[i] < 1 || w.bars[i] > n) throw Error(Errc::MalformedWord, "bar outside the word");
        if (i && w.bars[i] < w.bars[i - 1]) throw Error(Errc::MalformedWord, "bars not sorted");
    }
}

// 1-based position of the last occurrence of letter i in the fixed word
int last_pos(const BarredWord& w, int i) {
    int s = 0;
    for (int m = 1; m <= i; ++m) s += w.a[m - 1] + 1;
    return s;
}

int wrap(int i, int p) { return ((i - 1) % p + p) % p + 1; }

}  // namespace

BarredWord parse_barred_word(int p, const std::vector<int>& a, const std::string& text) {
    BarredWord w{p, a, {}};
    int pos = 0;
    std::string letters;
    for (char ch : text) {
        if (ch == '|') {
            w.bars.push_back(pos);
        } else if (ch >= '1' && ch <= '9') {
            letters.push_back(ch);
            ++pos;
        } else if (ch != ' ') {
            throw Error(Errc::MalformedWord, std::string("unexpected character '") + ch + "'");
        }
    }
    if (p > 9) throw Error(Errc::MalformedWord, "text form supports p <= 9");
    std::string expect;
    for (int i = 1; i <= p && i <= static_cast<int>(a.size()); ++i) expect.append(a[i - 1] + 1, static_cast<char>('0' + i));
    if (letters != expect) throw Error(Errc::MalformedWord, "letters must read 1^(a1+1) ... p^(ap+1)");
    check_word(w);
    return w;
}

std::string format_barred_word(const BarredWord& w) {
    std::string s;
    std::size_t b = 0;
    int pos = 0;
    for (int i = 1; i <= w.p; ++i)
        for (int r = 0; r <= w.a[i - 1]; ++r) {
            s.push_back(static_cast<char>('0' + i));
            ++pos;
            while (b < w.bars.size() && w.bars[b] == pos) {
                s.push_back('|');
                ++b;
            }
        }
    return s;
}

std::vector<BarredWord> all_barred_words(int p, const std::vector<int>& a) {
    BarredWord base{p, a, {}};
    const int n = barred_word_length(base);
    std::vector<BarredWord> out;
    std::vector<int> bars;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(bars.size()) == p - 1) {
            out.push_back({p, a, bars});
            return;
        }
        for (int k = from; k <= n; ++k) {
            bars.push_back(k);
            rec(k);
            bars.pop_back();
        }
    };
    rec(1);
    return out;
}

IVec barred_word_to_flow(const BarredWord& w, int* zero_red) {
    check_word(w);
    const int p = w.p, n = barred_word_length(w);
    // lattice path: letters step down at their last occurrence, bars after a letter step up
    int j = -1, height = 0, low = 1;
    std::size_t b = 0;
    for (int i = 1; i <= p; ++i) {
        int pos = last_pos(w, i);
        for (; b < w.bars.size() && w.bars[b] < pos; ++b) ++height;
        --height;
        if (height < low) {
            low = height;
            j = i;
        }
    }
    const int t = last_pos(w, j);
    // bars of W' = VU, numbered j+1, j+2, ... in reading order
    std::vector<int> shifted;
    for (int k : w.bars) shifted.push_back(k >= t ? k - t : k + n - t);
    std::sort(shifted.begin(), shifted.end());
    std::vector<int> kp(p + 1, 0);  // kp[i]: letters before bar i in W'
    for (int m = 0; m < p - 1; ++m) kp[wrap(j + 1 + m, p)] = shifted[m];
    // L[i]: 1-based position of the last i in W'
    std::vector<int> L(p + 1, 0);
    for (int i = 1; i <= p; ++i) {
        int pos = last_pos(w, i);
        L[i] = pos > t ? pos - t : pos + n - t;
    }
    IVec f(3 * p, 0);
    for (int i = 1; i <= p; ++i) f[hcp_blue(1, p, 0, i)] = w.a[i - 1];
    const int j1 = wrap(j + 1, p);
    for (int i = 1; i <= p; ++i) {
        int out;
        if (i == j1)
            out = kp[j1];
        else if (i == j)
            out = n - kp[wrap(j - 1, p)] - 1;
        else
            out = kp[i] - kp[wrap(i - 1, p)];
        f[hcp_blue(1, p, 1, i)] = out;
        f[hcp_red(1, p, 1, i)] = i == j ? 0 : L[i] - kp[i];
    }
    if (zero_red) *zero_red = j;
    return f;
}

BarredWord flow_to_barred_word(int p, const IVec& f) {
    if (p < 2 || static_cast<int>(f.size()) != 3 * p) throw Error(Errc::NotCyclicFlow, "flow has the wrong size");
    for (auto x : f)
        if (x < 0) throw Error(Errc::NotCyclicFlow, "negative flow value");
    int j = -1;
    for (int i = 1; i <= p; ++i)
        if (f[hcp_red(1, p, 1, i)] == 0) {
            if (j >= 0) throw Error(Errc::NotCyclicFlow, "more than one zero cycle edge");
            j = i;
        }
    if (j < 0) throw Error(Errc::NotCyclicFlow, "no zero cycle edge");
    BarredWord w{p, {}, {}};
    for (int i = 1; i <= p; ++i) w.a.push_back(static_cast<int>(f[hcp_blue(1, p, 0, i)]));
    for (int i = 1; i <= p; ++i) {
        auto net = f[hcp_red(1, p, 1, i)] + f[hcp_blue(1, p, 1, i)] - f[hcp_red(1, p, 1, wrap(i - 1, p))] -
                   f[hcp_blue(1, p, 0, i)];
        if (net != (i == j ? 0 : 1)) throw Error(Errc::NotCyclicFlow, "netflow mismatch at cycle vertex " + std::to_string(i));
    }
    const int n = barred_word_length(w);
    const int t = last_pos(w, j);
    std::int64_t acc = 0;
    for (int m = 0; m < p - 1; ++m) {
        acc += f[hcp_blue(1, p, 1, wrap(j + 1 + m, p))];
        int k = acc <= n - t ? static_cast<int>(acc) + t : static_cast<int>(acc) - n + t;
        w.bars.push_back(k);
    }
    std::sort(w.bars.begin(), w.bars.end());
    check_word(w);
    return w;
}

std::vector<IVec> cyclic_flows_h1p(int p, const std::vector<int>& a) {
    std::vector<IVec> out;
    for (int j = 1; j <= p; ++j) {
        IVec f(3 * p, 0);
        for (int i = 1; i <= p; ++i) f[hcp_blue(1, p, 0, i)] = a[i - 1];
        // r_j = 0; walk j+1, ..., j-1 choosing positive red values, blue-out absorbs the rest
        std::function<void(int, std::int64_t)> rec = [&](int step, std::int64_t prev_red) {
            if (step == p) {
                f[hcp_blue(1, p, 1, j)] = prev_red + a[j - 1];
                out.push_back(f);
                return;
            }
            int i = wrap(j + step, p);
            std::int64_t budget = prev_red + a[i - 1] + 1;  // red + blue_out
            for (std::int64_t r = 1; r <= budget; ++r) {
                f[hcp_red(1, p, 1, i)] = r;
                f[hcp_blue(1, p, 1, i)] = budget - r;
                rec(step + 1, r);
            }
        };
        f[hcp_red(1, p, 1, j)] = 0;
        rec(1, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flowfan
