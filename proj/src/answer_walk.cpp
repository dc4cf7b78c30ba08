#include "divsearch/answer_walk.hpp"

namespace divsearch {

namespace {

struct BranchPoint {
  Subscript subscript;
};

class ScriptedOracle final : public ComparisonOracle {
 public:
  ScriptedOracle(Subscript n, std::span<const Answer> script)
      : ComparisonOracle(n), script_(script) {}

 protected:
  Answer respond(Subscript i) override {
    if (next_ == script_.size()) throw BranchPoint{i};
    return script_[next_++];
  }

 private:
  std::span<const Answer> script_;
  std::size_t next_ = 0;
};

class Walker {
 public:
  Walker(Subscript n, const SearchRoutine& routine, const WalkOptions& options)
      : n_(n), routine_(routine), options_(options) {}

  WalkReport run() {
    visit();
    return report_;
  }

 private:
  void visit() {
    ScriptedOracle oracle(n_, script_);
    SearchOutcome outcome;
    try {
      outcome = routine_(oracle);
    } catch (const BranchPoint& bp) {
      for (Answer a : {Answer::LT, Answer::GT, Answer::EQ}) {
        if (a == Answer::EQ && !options_.allow_eq) continue;
        if (!oracle.transcript().admits(bp.subscript, a)) continue;
        script_.push_back(a);
        visit();
        script_.pop_back();
      }
      return;
    }
    leaf(oracle, outcome);
  }

  void leaf(const ScriptedOracle& oracle, const SearchOutcome& outcome) {
    ++report_.leaves;
    const auto& t = oracle.transcript();
    if (t.count() > report_.max_comparisons || report_.leaves == 1) {
      report_.max_comparisons = std::max(report_.max_comparisons, t.count());
      report_.worst_path = script_;
    }
    bool justified = true;
    if (outcome.found) {
      justified = !t.entries().empty() && t.entries().back().answer == Answer::EQ &&
                  outcome.match == t.entries().back().subscript;
    } else if (options_.scope.empty()) {
      for (Subscript i = 1; i <= n_ && justified; ++i) justified = t.decided(i);
    } else {
      for (Subscript i : options_.scope) justified = justified && t.decided(i);
    }
    if (!justified) ++report_.unjustified_leaves;
  }

  Subscript n_;
  const SearchRoutine& routine_;
  const WalkOptions& options_;
  std::vector<Answer> script_;
  WalkReport report_;
};

}  // namespace

WalkReport walk_answer_tree(Subscript n, const SearchRoutine& routine,
                            const WalkOptions& options) {
  return Walker(n, routine, options).run();
}

}  // namespace divsearch
