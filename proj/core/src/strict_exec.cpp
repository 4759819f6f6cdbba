#include "next/strict_exec.hpp"

#include <algorithm>
#include <stdexcept>

namespace next {

namespace {

// Per-position distances to each qualifying reference; a position is in the
// range iff its list is non-empty.
struct RangeCells {
  std::vector<std::vector<int>> dists;

  explicit RangeCells(int n) : dists(n) {}
  int count() const {
    int c = 0;
    for (const auto& d : dists) c += !d.empty();
    return c;
  }
};

class StrictEval {
 public:
  explicit StrictEval(const Instance& x) : x_(x) {}

  bool eval_bool(const Node& n) {
    switch (n.pred) {
      case Predicate::True:
        return true;
      case Predicate::False:
        return false;
      case Predicate::Because:
        return eval_bool(n.children[0]);
      case Predicate::And:
      case Predicate::Separator:
        return eval_bool(n.children[0]) && eval_bool(n.children[1]);
      case Predicate::Or:
        return eval_bool(n.children[0]) || eval_bool(n.children[1]);
      case Predicate::Not:
        return !eval_bool(n.children[0]);
      case Predicate::Occur:
        return !eval_query(n.children[0]).empty();
      case Predicate::Is:
        return overlap(eval_query(n.children[0]), eval_range(n.children[1]));
      case Predicate::Contains:
        return overlap(eval_query(n.children[1]), eval_range(n.children[0]));
      case Predicate::AtMost:
      case Predicate::AtLeast:
      case Predicate::MoreThan:
      case Predicate::LessThan:
      case Predicate::Equals:
        return compare(n.pred, eval_int(n.children[0]), eval_int(n.children[1]));
      default:
        throw std::logic_error("strict exec: node is not Bool-typed");
    }
  }

 private:
  long eval_int(const Node& n) {
    if (n.pred == Predicate::Int) return n.int_value;
    if (n.pred == Predicate::NumberOf) return eval_range(n.children[0]).count();
    throw std::logic_error("strict exec: node is not Int-typed");
  }

  static bool compare(Predicate p, long a, long b) {
    switch (p) {
      case Predicate::AtMost: return a <= b;
      case Predicate::AtLeast: return a >= b;
      case Predicate::MoreThan: return a > b;
      case Predicate::LessThan: return a < b;
      case Predicate::Equals: return a == b;
      default: throw std::logic_error("not a comparison");
    }
  }

  // Exact occurrences of a query.
  std::vector<Span> eval_query(const Node& n) {
    switch (n.pred) {
      case Predicate::Word:
        return find_occurrences(x_.tokens, n.children[0].str_value);
      case Predicate::Link: {
        std::vector<Span> a = eval_query(n.children[0]);
        std::vector<Span> b = eval_query(n.children[1]);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      default:
        throw std::logic_error("strict exec: node is not Query-typed");
    }
  }

  // Located occurrences of a reference argument (anchor or exact string).
  std::vector<Span> eval_reference(const Node& n) {
    switch (n.pred) {
      case Predicate::ArgX: return {x_.anchor(kSubjectRole)};
      case Predicate::ArgY: return {x_.anchor(kObjectRole)};
      case Predicate::Arg: return {x_.anchor(kTermRole)};
      default: return eval_query(n);
    }
  }

  RangeCells eval_range(const Node& n) {
    const int len = x_.size();
    RangeCells cells(len);
    switch (n.pred) {
      case Predicate::Left:
        for (const Span& r : eval_reference(n.children[0])) {
          for (int i = 0; i < std::min(r.begin, len); ++i) {
            cells.dists[i].push_back(r.begin - i);
          }
        }
        return cells;
      case Predicate::Right:
        for (const Span& r : eval_reference(n.children[0])) {
          for (int i = std::max(r.end, 0); i < len; ++i) {
            cells.dists[i].push_back(i - (r.end - 1));
          }
        }
        return cells;
      case Predicate::Between: {
        auto as = eval_reference(n.children[0]);
        auto bs = eval_reference(n.children[1]);
        for (const Span& a : as) {
          for (const Span& b : bs) {
            const Span& l = (a.begin <= b.begin) ? a : b;
            const Span& r = (a.begin <= b.begin) ? b : a;
            if (l.end > r.begin) continue;  // overlapping spans: no interior
            for (int i = l.end; i < r.begin; ++i) {
              int d = std::min(i - (l.end - 1), r.begin - i);
              cells.dists[i].push_back(d);
            }
          }
        }
        return cells;
      }
      case Predicate::Within: {
        long k = eval_int(n.children[1]);
        for (const Span& r : eval_reference(n.children[0])) {
          for (int i = 0; i < len; ++i) {
            int d;
            if (i < r.begin) d = r.begin - i;
            else if (i >= r.end) d = i - (r.end - 1);
            else continue;  // the span itself is not "within"
            if (d >= 1 && d <= k) cells.dists[i].push_back(d);
          }
        }
        return cells;
      }
      case Predicate::Direct:
        return filter_range(eval_range(n.children[0]),
                            [](int d) { return d == 1; });
      case Predicate::AtMost:
      case Predicate::AtLeast:
      case Predicate::MoreThan:
      case Predicate::LessThan:
      case Predicate::Equals: {
        long k = eval_int(n.children[1]);
        Predicate p = n.pred;
        return filter_range(eval_range(n.children[0]),
                            [p, k](int d) { return compare(p, d, k); });
      }
      default:
        throw std::logic_error("strict exec: node is not Range-typed");
    }
  }

  template <typename Keep>
  static RangeCells filter_range(RangeCells in, Keep keep) {
    for (auto& ds : in.dists) {
      std::erase_if(ds, [&](int d) { return !keep(d); });
    }
    return in;
  }

  static bool overlap(const std::vector<Span>& occs, const RangeCells& cells) {
    for (const Span& o : occs) {
      for (int i = o.begin; i < o.end; ++i) {
        if (i >= 0 && i < static_cast<int>(cells.dists.size()) &&
            !cells.dists[i].empty()) {
          return true;
        }
      }
    }
    return false;
  }

  const Instance& x_;
};

}  // namespace

int exec_strict(const Node& root, const Instance& x) {
  StrictEval ev(x);
  return ev.eval_bool(root) ? 1 : 0;
}

int exec_strict(const LogicalForm& form, const Instance& x) {
  return exec_strict(form.root, x);
}

}  // namespace next
