#include "multiassoc/moves.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "multiassoc/subword_complex.hpp"

namespace multiassoc {

int MoveTrace::count(MoveKind kind) const {
    int c = 0;
    for (const auto& s : steps) c += s.event.kind == kind;
    return c;
}

std::vector<MoveEvent> MoveTrace::events() const {
    std::vector<MoveEvent> out;
    for (const auto& s : steps) out.push_back(s.event);
    return out;
}

bool applicable(const Word& w, MoveEvent e) {
    int r = e.position, p = w.size();
    switch (e.kind) {
        case MoveKind::Double: return r >= 1 && r <= p;
        case MoveKind::Commutation: return r >= 1 && r + 1 <= p && std::abs(w.at(r) - w.at(r + 1)) >= 2;
        case MoveKind::Braid:
            return r >= 1 && r + 2 <= p && w.at(r) == w.at(r + 2) && std::abs(w.at(r) - w.at(r + 1)) == 1;
    }
    return false;
}

MoveResult apply_move(const Word& w, MoveEvent e) {
    if (!applicable(w, e))
        throw std::invalid_argument(std::string("move ") + move_code(e.kind) + " " + std::to_string(e.position) +
                                    " is not applicable");
    std::vector<int> l = w.letters();
    PositionMap m = identity_map(w.size());
    const int r = e.position;
    switch (e.kind) {
        case MoveKind::Double:
            l.insert(l.begin() + r, l[r - 1]);
            for (int t = r + 1; t <= w.size(); ++t) m[t - 1] = t + 1;
            break;
        case MoveKind::Commutation:
            std::swap(l[r - 1], l[r]);
            std::swap(m[r - 1], m[r]);
            break;
        case MoveKind::Braid:
            std::swap(l[r - 1], l[r]);
            l[r + 1] = l[r - 1];
            std::swap(m[r - 1], m[r + 1]);
            break;
    }
    return {Word(w.rank(), std::move(l)), std::move(m)};
}

LabelRow apply_move(const LabelRow& labels, MoveEvent e) {
    LabelRow out = labels;
    const int r = e.position;
    switch (e.kind) {
        case MoveKind::Double: {
            std::optional<Label> twin = out.at(r - 1);
            if (twin) twin->primed = true;
            out.insert(out.begin() + r, twin);
            break;
        }
        case MoveKind::Commutation: std::swap(out.at(r - 1), out.at(r)); break;
        case MoveKind::Braid: std::swap(out.at(r - 1), out.at(r + 1)); break;
    }
    return out;
}

int classify_braid(const Word& w, int r) {
    if (!applicable(w, {MoveKind::Braid, r})) throw std::invalid_argument("classify_braid: not a braid factor");
    bool v0 = contains_longest(w.without({r}));
    bool v1 = contains_longest(w.without({r + 1}));
    bool v2 = contains_longest(w.without({r + 2}));
    int count = v0 + v1 + v2;
    if (count == 0) return 1;
    if (count == 1 && !v1) return 2;
    if (count == 2 && !v1) {
        if (!contains_longest(w.without({r, r + 2})))
            throw std::logic_error("classify_braid: outer letters do not form an edge");
        return 3;
    }
    if (count == 3) return contains_longest(w.without({r, r + 1, r + 2})) ? 5 : 4;
    throw std::logic_error("classify_braid: impossible vertex configuration");
}

bool has_triangle(const Word& w, int offset, int rank) {
    Word t = c_sorted_word(rank);
    if (offset < 1 || offset - 1 + t.size() > w.size()) return false;
    for (int r = 1; r <= t.size(); ++r)
        if (w.at(offset - 1 + r) != t.at(r)) return false;
    return true;
}

LabelRow triangle_labels(const Word& w, int offset, int rank) {
    if (!has_triangle(w, offset, rank)) throw std::invalid_argument("no triangle w0(c) at the given offset");
    LabelRow out(w.size());
    int r = offset;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank + 1 - i; ++j) out[r++ - 1] = Label{i, j, false};
    return out;
}

std::vector<MoveEvent> commutation_moves(const Word& from, const Word& to, int begin) {
    if (from.size() != to.size()) throw std::invalid_argument("commutation_moves: length mismatch");
    std::vector<int> l = from.letters();
    std::vector<MoveEvent> out;
    for (int t = begin; t <= to.size(); ++t) {
        int p = t;
        while (p <= static_cast<int>(l.size()) && l[p - 1] != to.at(t)) ++p;
        if (p > static_cast<int>(l.size())) throw std::invalid_argument("commutation_moves: words differ");
        for (; p > t; --p) {
            if (std::abs(l[p - 2] - l[p - 1]) < 2)
                throw std::invalid_argument("commutation_moves: words are not commutation equivalent");
            std::swap(l[p - 2], l[p - 1]);
            out.push_back({MoveKind::Commutation, p - 1});
        }
    }
    return out;
}

namespace {

class TraceBuilder {
public:
    TraceBuilder(const Word& w, LabelRow labels) {
        trace_.initial = w;
        trace_.initial_labels = std::move(labels);
    }

    const Word& word() const { return trace_.final_word(); }
    const LabelRow& labels() const { return trace_.final_labels(); }

    void push(MoveEvent e) {
        MoveStep s{e, apply_move(word(), e).word, apply_move(labels(), e)};
        trace_.steps.push_back(std::move(s));
    }

    // replace the factor starting at `begin` by the literal `target` using commutations
    void normalize(int begin, const std::vector<int>& target) {
        std::vector<int> l = word().letters();
        std::copy(target.begin(), target.end(), l.begin() + (begin - 1));
        for (MoveEvent e : commutation_moves(word(), Word(word().rank(), l), begin)) push(e);
    }

    // Braid block of a letter insertion on s_1 s_1 c[2,m] c[m-1] ... starting at `first`:
    // the second s_k is commuted left next to s_k s_{k+1}, then braided.
    void insertion_braids(int first, int m, bool check_labels) {
        int q = first + 1;
        for (int k = 1; k < m; ++k) {
            int pos = q + 1 + (m - k);
            if (word().at(pos) != k) throw std::logic_error("letter insertion: letter s_k not where expected");
            while (std::abs(word().at(pos - 1) - word().at(pos)) >= 2) {
                push({MoveKind::Commutation, pos - 1});
                --pos;
            }
            if (pos != q + 2) throw std::logic_error("letter insertion: s_k blocked before the braid");
            if (check_labels) check_braid_labels(q);
            push({MoveKind::Braid, q});
            q += 2;
        }
    }

    void fatten_doublings(int off, int m) {
        if (m == 0) return;
        push({MoveKind::Double, off});
        fatten_doublings(off + 1 + m, m - 1);
    }

    void fatten_braids(int off, int m) {
        if (m == 0) return;
        fatten_braids(off + 1 + m, m - 1);
        insertion_braids(off, m, true);
        std::vector<int> target = c_sorted_word(m).letters();
        for (int i = m; i >= 1; --i) target.push_back(i);
        normalize(off, target);
    }

    MoveTrace take() { return std::move(trace_); }

private:
    void check_braid_labels(int q) const {
        const auto& x = labels().at(q - 1);
        const auto& y = labels().at(q);
        const auto& z = labels().at(q + 1);
        bool ok = x && y && z && x->primed && x->j == 1 && !y->primed && y->i == x->i && y->j >= 2 && !z->primed &&
                  z->j == 1 && z->i == x->i + y->j - 1;
        if (!ok) throw std::logic_error("fattening: braid labels differ from (i,1)', (i,j+1), (i+j,1)");
    }

    MoveTrace trace_;
};

int triangle_rank(const Word& w, int offset) {
    int n = w.rank();
    if (!has_triangle(w, offset, n)) throw std::invalid_argument("no triangle w0(c) at the given offset");
    return n;
}

}  // namespace

MoveTrace insertion_sequence(const Word& w, int offset, int ell) {
    int n = triangle_rank(w, offset);
    if (ell < 1 || ell > n) throw std::invalid_argument("insertion_sequence: ell out of range");
    // first s_1 of the suffix triangle w0(c[ell])
    int first = offset;
    for (int i = 1; i <= n - ell; ++i) first += n + 1 - i;
    TraceBuilder b(w, triangle_labels(w, offset, n));
    b.push({MoveKind::Double, first});
    b.insertion_braids(first, ell, false);
    std::vector<int> target = c_sorted_word(ell).letters();
    target.push_back(ell);
    b.normalize(first, target);
    return b.take();
}

MoveTrace fattening_sequence(const Word& w, int offset) {
    int n = triangle_rank(w, offset);
    TraceBuilder b(w, triangle_labels(w, offset, n));
    b.fatten_doublings(offset, n);
    b.fatten_braids(offset, n);
    return b.take();
}

MoveTrace replay(const Word& initial, const LabelRow& labels, const std::vector<MoveEvent>& events) {
    TraceBuilder b(initial, labels.empty() ? LabelRow(initial.size()) : labels);
    for (MoveEvent e : events) b.push(e);
    return b.take();
}

char move_code(MoveKind kind) {
    switch (kind) {
        case MoveKind::Commutation: return 'C';
        case MoveKind::Double: return 'D';
        case MoveKind::Braid: return 'B';
    }
    return '?';
}

void write_trace(std::ostream& out, const MoveTrace& trace, bool verbose) {
    out << "# word: " << format_word(trace.initial) << "\n";
    for (const auto& s : trace.steps) {
        out << move_code(s.event.kind) << " " << s.event.position << "\n";
        if (verbose) out << format_word(s.word) << "\n";
    }
}

TraceFile read_trace(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# word: ", 0) != 0)
        throw std::invalid_argument("trace file: missing '# word:' header");
    TraceFile tf{parse_word(line.substr(8)), {}};
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;  // comments and verbose word lines
        std::istringstream ls(line);
        char code = 0;
        int r = 0;
        if (!(ls >> code >> r)) throw std::invalid_argument("trace file: bad line '" + line + "'");
        MoveKind k;
        if (code == 'C')
            k = MoveKind::Commutation;
        else if (code == 'D')
            k = MoveKind::Double;
        else if (code == 'B')
            k = MoveKind::Braid;
        else
            throw std::invalid_argument("trace file: unknown move '" + std::string(1, code) + "'");
        tf.events.push_back({k, r});
    }
    return tf;
}

}  // namespace multiassoc
