#include "idig/idomatic.hpp"

#include "idig/oracle.hpp"
#include "idig/solvers.hpp"

namespace idig {

namespace {

struct Packer {
    const std::vector<VertexSet>& sets;
    std::size_t k;
    std::vector<std::size_t> best, current;

    explicit Packer(const std::vector<VertexSet>& s) : sets(s), k(s.size()) {}

    void run(std::size_t i, const VertexSet& used) {
        if (current.size() + (k - i) <= best.size()) return;
        if (i == k) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (!sets[i].intersects(used)) {
            current.push_back(i);
            run(i + 1, used | sets[i]);
            current.pop_back();
        }
        run(i + 1, used);
    }
};

} // namespace

IdomaticResult idomatic_exact(const Digraph& D) {
    IdsEnumeration e = enumerate_ids(D);
    if (!e.exhaustive)
        throw cap_exceeded_error("IDS enumeration truncated; exact packing would be unsound");
    IdomaticResult r;
    r.method = IdomaticMethod::exact_packing;
    if (e.sets.empty()) return r;
    Packer p(e.sets);
    p.run(0, VertexSet(D.n()));
    r.value = static_cast<int>(p.best.size());
    for (std::size_t i : p.best) r.witness.push_back(e.sets[i]);
    return r;
}

std::optional<IdomaticResult> idomatic_closed_form(const Digraph& D) {
    FamilyTags t = classify(D);
    IdomaticResult r;
    r.method = IdomaticMethod::closed_form;
    if (t.tournament) {
        SolveOutcome s = solve_tournament(D);
        if (s.status == SolveStatus::Found) {
            r.value = 1;
            r.witness.push_back(s.set);
        }
        return r;
    }
    if (t.directed_cycle) {
        DirectedCycleResult s = solve_directed_cycle(D);
        if (s.both_sets) {
            r.value = 2;
            r.witness.push_back(s.both_sets->first);
            r.witness.push_back(s.both_sets->second);
        }
        return r;
    }
    if (t.directed_path) {
        r.value = 1;
        r.witness.push_back(solve_directed_path(D).set);
        return r;
    }
    if (t.arborescence) {
        r.value = 1;
        r.witness.push_back(solve_arborescence(D).set);
        return r;
    }
    if (t.anti_arborescence) {
        r.value = 1;
        r.witness.push_back(solve_anti_arborescence(D).set);
        return r;
    }
    return std::nullopt;
}

} // namespace idig
