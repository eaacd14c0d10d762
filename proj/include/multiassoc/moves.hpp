#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multiassoc/word.hpp"

namespace multiassoc {

enum class MoveKind { Commutation, Double, Braid };

struct MoveEvent {
    MoveKind kind;
    int position;
    bool operator==(const MoveEvent&) const = default;
};

struct Label {
    int i = 0;
    int j = 0;
    bool primed = false;
    bool operator==(const Label&) const = default;
};

using LabelRow = std::vector<std::optional<Label>>;

struct MoveStep {
    MoveEvent event;
    Word word;
    LabelRow labels;
};

struct MoveTrace {
    Word initial;
    LabelRow initial_labels;
    std::vector<MoveStep> steps;

    const Word& final_word() const { return steps.empty() ? initial : steps.back().word; }
    const LabelRow& final_labels() const { return steps.empty() ? initial_labels : steps.back().labels; }
    int count(MoveKind kind) const;
    std::vector<MoveEvent> events() const;
};

struct MoveResult {
    Word word;
    PositionMap correspondence;
};

bool applicable(const Word& w, MoveEvent e);
MoveResult apply_move(const Word& w, MoveEvent e);
// label evolution: doubling (i,j) gives (i,j) and (i,j)'; braids exchange outer labels
LabelRow apply_move(const LabelRow& labels, MoveEvent e);

// case 1..5 of the braid-move classification
int classify_braid(const Word& w, int r);

// labels (i,j) of w0(c) placed on a triangle of the given rank starting at `offset`
LabelRow triangle_labels(const Word& w, int offset, int rank);
bool has_triangle(const Word& w, int offset, int rank);

// leftward bubble commutations turning `from` into the literal word `to`, touching
// only positions >= begin
std::vector<MoveEvent> commutation_moves(const Word& from, const Word& to, int begin = 1);

// w0(c) -> w0(c) s_ell on the triangle at `offset`
MoveTrace insertion_sequence(const Word& w, int offset, int ell);
// w0(c) -> w0(c) c^T on the triangle at `offset`: all doublings, then braids
MoveTrace fattening_sequence(const Word& w, int offset);

MoveTrace replay(const Word& initial, const LabelRow& labels, const std::vector<MoveEvent>& events);

char move_code(MoveKind kind);
void write_trace(std::ostream& out, const MoveTrace& trace, bool verbose);
struct TraceFile {
    Word initial;
    std::vector<MoveEvent> events;
};
TraceFile read_trace(std::istream& in);

}  // namespace multiassoc
